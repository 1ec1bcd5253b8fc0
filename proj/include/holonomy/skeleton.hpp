#pragma once

// The skeleton of a transformation semigroup: its extended image set
// (images of the full state set, plus the full set and every singleton),
// the subduction preorder on it, the mutual-reachability classes with chosen
// representatives, tiles, and height/depth values.
//
// Sets are indexed in the total order of total_order_less, so index 0 is
// always the full state set and the singletons come last. Comparing two
// indices is the same as comparing the sets in that order.
//
// Heights count nodes: a minimal non-singleton class has height 1 and every
// singleton has height 0. depth(P) = height(X) - height(P) + 1, so the full
// set sits at depth 1 and the singletons one below the deepest level.

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "holonomy/transformation.hpp"

namespace holonomy {

  using SetIndex = std::size_t;

  struct EquivalenceClass {
    // Sorted by set index; front() is the representative.
    std::vector<SetIndex> members;
    SetIndex              representative = 0;
    std::size_t           cardinality    = 0;
  };

  class Skeleton {
   public:
    explicit Skeleton(GeneratorSet gens);

    Skeleton(Skeleton&&) noexcept            = default;
    Skeleton& operator=(Skeleton&&) noexcept = default;
    ~Skeleton();

    [[nodiscard]] GeneratorSet const& generators() const noexcept {
      return gens_;
    }
    [[nodiscard]] std::size_t degree() const noexcept {
      return gens_.degree();
    }

    ////////////////////////////////////////////////////////////////////////
    // Extended image set
    ////////////////////////////////////////////////////////////////////////

    [[nodiscard]] std::size_t size() const noexcept {
      return sets_.size();
    }
    [[nodiscard]] StateSubset set(SetIndex i) const {
      return sets_.at(i);
    }
    [[nodiscard]] std::vector<StateSubset> const& sets() const noexcept {
      return sets_;
    }
    [[nodiscard]] static constexpr SetIndex top() noexcept {
      return 0;
    }
    [[nodiscard]] std::optional<SetIndex> find(StateSubset s) const;
    // Throws DomainError if s is not in the extended image set.
    [[nodiscard]] SetIndex index_of(StateSubset s) const;
    // Whether the set is X.s for some s in S (as opposed to being added only
    // because it is X itself or a singleton).
    [[nodiscard]] bool is_image(SetIndex i) const {
      return is_image_.at(i);
    }
    [[nodiscard]] bool is_singleton(SetIndex i) const {
      return sets_.at(i).is_singleton();
    }
    [[nodiscard]] SetIndex act(SetIndex i, std::size_t generator) const {
      return action_[i * gens_.size() + generator];
    }
    [[nodiscard]] SetIndex act(SetIndex i, Transformation const& s) const {
      return index_of(act_set(sets_.at(i), s));
    }
    [[nodiscard]] SetIndex act(SetIndex i, Word const& w) const;

    ////////////////////////////////////////////////////////////////////////
    // Subduction and equivalence
    ////////////////////////////////////////////////////////////////////////

    // P is contained in Q.s for some s in S^1.
    [[nodiscard]] bool subduction_holds(SetIndex P, SetIndex Q) const;
    [[nodiscard]] bool strictly_subducts(SetIndex P, SetIndex Q) const {
      return subduction_holds(P, Q) && !subduction_holds(Q, P);
    }
    // Sets reachable from P under S^1, in index order.
    [[nodiscard]] std::vector<SetIndex> const& orbit(SetIndex P) const;

    [[nodiscard]] std::vector<EquivalenceClass> const& classes()
        const noexcept {
      return classes_;
    }
    [[nodiscard]] std::size_t class_of(SetIndex i) const {
      return class_of_.at(i);
    }
    [[nodiscard]] bool equivalent(SetIndex P, SetIndex Q) const {
      return class_of(P) == class_of(Q);
    }
    [[nodiscard]] SetIndex representative(SetIndex i) const {
      return classes_[class_of(i)].representative;
    }
    [[nodiscard]] bool is_representative(SetIndex i) const {
      return representative(i) == i;
    }

    // to_rep(P) maps P bijectively onto its representative R, from_rep(P)
    // maps R back onto P, and to_rep(P) followed by from_rep(P) is the
    // identity on P. Both are empty for a representative.
    [[nodiscard]] Word const& to_rep(SetIndex i) const {
      return to_rep_.at(i);
    }
    [[nodiscard]] Word const& from_rep(SetIndex i) const {
      return from_rep_.at(i);
    }
    [[nodiscard]] Transformation const& to_rep_map(SetIndex i) const {
      return to_rep_map_.at(i);
    }
    [[nodiscard]] Transformation const& from_rep_map(SetIndex i) const {
      return from_rep_map_.at(i);
    }

    // Shortlex-least word w with P.w = Q, if any.
    [[nodiscard]] std::optional<Word> word_between(SetIndex P,
                                                   SetIndex Q) const;

    ////////////////////////////////////////////////////////////////////////
    // Tiles, heights, depths
    ////////////////////////////////////////////////////////////////////////

    // The maximal proper subsets of P in the extended image set, in index
    // order. Throws DomainError for a singleton.
    [[nodiscard]] std::vector<SetIndex> const& tiles(SetIndex P) const;

    [[nodiscard]] std::size_t height(SetIndex i) const {
      return height_.at(i);
    }
    [[nodiscard]] std::size_t depth(SetIndex i) const {
      return levels_ - height_.at(i) + 1;
    }
    // h_S(X): the number of levels of the decomposition.
    [[nodiscard]] std::size_t levels() const noexcept {
      return levels_;
    }
    // Non-singleton representatives at depth d, in index order. Throws
    // DomainError unless 1 <= d <= levels().
    [[nodiscard]] std::vector<SetIndex> const& representatives_at_depth(
        std::size_t d) const;

   private:
    struct OrbitCache;

    void build_sets();
    void build_classes();
    void build_witnesses();
    void build_tiles();
    void build_heights();

    GeneratorSet                                      gens_;
    std::vector<StateSubset>                          sets_;
    std::unordered_map<std::uint64_t, SetIndex>       index_;
    std::vector<bool>                                 is_image_;
    std::vector<SetIndex>                             action_;
    std::vector<EquivalenceClass>                     classes_;
    std::vector<std::size_t>                          class_of_;
    std::vector<Word>                                 to_rep_;
    std::vector<Word>                                 from_rep_;
    std::vector<Transformation>                       to_rep_map_;
    std::vector<Transformation>                       from_rep_map_;
    std::vector<std::vector<SetIndex>>                tiles_;
    std::vector<std::size_t>                          height_;
    std::size_t                                       levels_ = 0;
    std::vector<std::vector<SetIndex>>                reps_by_depth_;
    std::unique_ptr<OrbitCache>                       orbits_;
  };

}  // namespace holonomy
