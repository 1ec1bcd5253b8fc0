#pragma once

// Maximal chains of the extended image set, their canonical completion, the
// lifts of generators to chain maps, and the depth-aligned (positioned) form
// of a chain.

#include <cstddef>
#include <optional>
#include <map>
#include <vector>

#include "holonomy/semigroup.hpp"
#include "holonomy/skeleton.hpp"

namespace holonomy {

  // Members listed top-down, each a proper subset of the one before.
  using Chain = std::vector<SetIndex>;

  // Slot i (0-based) holds the chain member positioned at level i + 1, or
  // nullopt for *.
  struct PositionedChain {
    std::vector<std::optional<SetIndex>> slots;
    friend bool operator==(PositionedChain const&, PositionedChain const&)
        = default;
  };

  // Depth-first descent from X along tiles, branches in index order.
  // Throws BudgetExceeded past `max_chains`.
  [[nodiscard]] std::vector<Chain> enumerate_maximal_chains(
      Skeleton const& sk,
      std::size_t     max_chains = kDefaultBudget);

  [[nodiscard]] bool is_maximal_chain(Skeleton const& sk, Chain const& c);

  // The point of the singleton at the bottom of a maximal chain.
  [[nodiscard]] Point eta(Skeleton const& sk, Chain const& c);

  // The canonical maximal chain containing c: repeatedly insert the
  // least insertable set (in index order) until nothing is insertable.
  // Throws DomainError if c is not totally ordered by inclusion.
  [[nodiscard]] Chain dominate(Skeleton const& sk, Chain c);

  // Members of c moved by generator a, duplicates removed. May not be
  // maximal.
  [[nodiscard]] Chain act_chain(Skeleton const& sk,
                                Chain const&    c,
                                std::size_t     a);

  // The same for an arbitrary element of the semigroup.
  [[nodiscard]] Chain act_chain(Skeleton const&       sk,
                                Chain const&          c,
                                Transformation const& t);

  // Two chains agree down to P if both contain P and the same sets above
  // it. For chains inside the extended image set this means equal prefixes
  // ending at P.
  [[nodiscard]] bool agree_down_to(Chain const& c, Chain const& d, SetIndex P);

  // The lift of a generator: act on members, deduplicate, dominate.
  class LiftedGenerator {
   public:
    LiftedGenerator(Skeleton const& sk, std::size_t generator);

    [[nodiscard]] std::size_t generator() const noexcept {
      return generator_;
    }
    [[nodiscard]] Chain operator()(Chain const& c) const;

   private:
    Skeleton const* sk_;
    std::size_t     generator_;
  };

  [[nodiscard]] LiftedGenerator lift_generator(Skeleton const& sk,
                                               std::size_t     a);

  // dominate(c.t) for an element t, lifted directly rather than letter by
  // letter. May differ from apply_lift_word on a word evaluating to t.
  [[nodiscard]] Chain lift_element(Skeleton const&       sk,
                                   Transformation const& t,
                                   Chain const&          c);

  // Applies the lifts of the letters of w in order.
  [[nodiscard]] Chain apply_lift_word(Skeleton const& sk,
                                      Word const&     w,
                                      Chain           c);

  // Slot d(P_k) receives P_{k+1} for consecutive members P_k > P_{k+1}.
  [[nodiscard]] PositionedChain position(Skeleton const& sk, Chain const& c);
  // Inverse of position: X followed by the filled slots in order.
  [[nodiscard]] Chain unposition(Skeleton const& sk, PositionedChain const& p);

  // State of approximation at every level: entry 0 is X, entry i is the
  // content of the deepest filled slot strictly above level i + 1 (or X).
  [[nodiscard]] std::vector<SetIndex> alpha(Skeleton const&        sk,
                                            PositionedChain const& p);
  // The same for a single 1-based level, reading only slots above it.
  [[nodiscard]] SetIndex alpha_at(PositionedChain const& p, std::size_t level);

  // The maximal chains together with the lift of every generator as a table
  // on chain indices.
  class ChainSemigroup {
   public:
    explicit ChainSemigroup(Skeleton const& sk,
                            std::size_t     max_chains = kDefaultBudget);

    ChainSemigroup(ChainSemigroup const&)            = delete;
    ChainSemigroup& operator=(ChainSemigroup const&) = delete;

    [[nodiscard]] Skeleton const& skeleton() const noexcept {
      return *sk_;
    }
    [[nodiscard]] std::vector<Chain> const& chains() const noexcept {
      return chains_;
    }
    [[nodiscard]] std::size_t index_of(Chain const& c) const;
    // Chain index of lift(a)(chains()[c]).
    [[nodiscard]] std::size_t lift(std::size_t a, std::size_t c) const {
      return table_[a * chains_.size() + c];
    }
    [[nodiscard]] std::size_t lift_word(Word const& w, std::size_t c) const;

    // The distinct chain maps generated by the lifted generators, each as an
    // image table on chain indices. Throws BudgetExceeded past `budget`.
    [[nodiscard]] std::vector<std::vector<std::size_t>> enumerate_elements(
        std::size_t budget = kDefaultBudget) const;

   private:
    Skeleton const*                  sk_;
    std::vector<Chain>               chains_;
    std::map<Chain, std::size_t>     index_;
    std::vector<std::size_t>         table_;
  };

}  // namespace holonomy
