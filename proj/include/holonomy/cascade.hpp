#pragma once

// The holonomy cascade: positioned chains encoded as coordinate vectors over
// the per-depth components, lifted generators encoded as transformation
// cascades (one dependency function per level), and their coordinatewise
// action.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "holonomy/chains.hpp"
#include "holonomy/holonomy_group.hpp"
#include "holonomy/skeleton.hpp"

namespace holonomy {

  // Entry i-1 is the state of component i.
  using Coordinates = std::vector<Coordinate>;

  class Cascade {
   public:
    Cascade(Skeleton const& sk, Holonomy const& hol);
    ~Cascade();

    Cascade(Cascade const&)            = delete;
    Cascade& operator=(Cascade const&) = delete;

    [[nodiscard]] Skeleton const& skeleton() const noexcept {
      return *sk_;
    }
    [[nodiscard]] Holonomy const& holonomy() const noexcept {
      return *hol_;
    }
    [[nodiscard]] std::size_t levels() const noexcept {
      return sk_->levels();
    }

    // The set behind a tagged tile of the depth-`level` component.
    [[nodiscard]] SetIndex tile_set(std::size_t level, Tile t) const;

    // A filled slot j becomes its image under to_rep(alpha_j), tagged as a
    // tile of the representative; * stays *.
    [[nodiscard]] Coordinates encode(PositionedChain const& p) const;
    [[nodiscard]] Coordinate  encode_level(PositionedChain const& p,
                                           std::size_t            level) const;
    // Level by level from the top, pushing each slot through
    // from_rep(alpha_j). Throws DomainError naming the first bad level.
    [[nodiscard]] PositionedChain decode(Coordinates const& v) const;

    // The value of the level-`level` dependency function of the lift of
    // generator a at a prefix of length level - 1. Prefixes that no chain
    // encodes to evaluate to constant *.
    [[nodiscard]] ComponentElement dependency(
        std::size_t                 a,
        std::size_t                 level,
        std::span<Coordinate const> prefix) const;
    // Whether a prefix of length level - 1 is the encoding of some chain's
    // prefix.
    [[nodiscard]] bool is_reachable_prefix(
        std::span<Coordinate const> prefix) const;

    // Coordinatewise action of the lift of generator a. Every level reads
    // the prefix of the input vector.
    [[nodiscard]] Coordinates apply(std::size_t a, Coordinates const& v) const;
    [[nodiscard]] Coordinates apply_word(Word const& w, Coordinates v) const;

    // Replaces one dependency value. Used to check that the verifiers catch
    // a corrupted cascade.
    void override_dependency(std::size_t                 a,
                             std::size_t                 level,
                             std::span<Coordinate const> prefix,
                             ComponentElement            value);

   private:
    struct Memo;

    [[nodiscard]] std::optional<PositionedChain> decode_prefix(
        std::span<Coordinate const> prefix,
        std::size_t*                bad_level) const;
    [[nodiscard]] ComponentElement compute_dependency(
        std::size_t                 a,
        std::size_t                 level,
        std::span<Coordinate const> prefix) const;
    [[nodiscard]] std::vector<std::uint32_t> memo_key(
        std::size_t                 a,
        std::size_t                 level,
        std::span<Coordinate const> prefix) const;

    Skeleton const*                   sk_;
    Holonomy const*                   hol_;
    // block_offset_[level - 1][r]: tiles of the blocks before block r.
    std::vector<std::vector<std::size_t>> block_offset_;
    std::unique_ptr<Memo>             memo_;
  };

  // enc(a-hat): the transformation cascade of a lifted generator. The
  // dependency functions are evaluated lazily through the cascade.
  class CascadeTransformation {
   public:
    CascadeTransformation(Cascade const& c, std::size_t generator)
        : cascade_(&c), generator_(generator) {}

    [[nodiscard]] std::size_t generator() const noexcept {
      return generator_;
    }
    // d_level(prefix); level 1 takes the empty prefix.
    [[nodiscard]] ComponentElement at(
        std::size_t                 level,
        std::span<Coordinate const> prefix) const {
      return cascade_->dependency(generator_, level, prefix);
    }
    [[nodiscard]] Coordinates operator()(Coordinates const& v) const {
      return cascade_->apply(generator_, v);
    }

   private:
    Cascade const* cascade_;
    std::size_t    generator_;
  };

  [[nodiscard]] CascadeTransformation encode_lift(Cascade const&         c,
                                                  LiftedGenerator const& lift);
  // Throws DomainError if the vector length differs from the level count.
  [[nodiscard]] Coordinates apply(CascadeTransformation const& ct,
                                  Coordinates const&           v);

  // Everything built from one generating set. Not movable: the members
  // refer to each other.
  class Decomposition {
   public:
    explicit Decomposition(GeneratorSet gens,
                           std::size_t  budget = kDefaultBudget);

    Decomposition(Decomposition const&)            = delete;
    Decomposition& operator=(Decomposition const&) = delete;

    [[nodiscard]] Skeleton const& skeleton() const noexcept {
      return skeleton_;
    }
    [[nodiscard]] Holonomy const& holonomy() const noexcept {
      return holonomy_;
    }
    [[nodiscard]] Cascade const& cascade() const noexcept {
      return cascade_;
    }
    [[nodiscard]] Cascade& cascade() noexcept {
      return cascade_;
    }

   private:
    Skeleton skeleton_;
    Holonomy holonomy_;
    Cascade  cascade_;
  };

}  // namespace holonomy
