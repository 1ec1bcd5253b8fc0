#pragma once

// Permutator groups of class representatives, their faithful actions on
// tiles (holonomy groups), and the per-depth permutation-reset components
// of the holonomy cascade.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holonomy/semigroup.hpp"
#include "holonomy/skeleton.hpp"

namespace holonomy {

  // A permutation of {0, ..., m-1}; entry i is the image of i.
  using Permutation = std::vector<std::size_t>;

  [[nodiscard]] Permutation identity_permutation(std::size_t m);
  [[nodiscard]] bool        is_identity(Permutation const& p);
  // p then q.
  [[nodiscard]] Permutation multiply(Permutation const& p,
                                     Permutation const& q);
  // Cycle notation on 1-based labels, "()" for the identity.
  [[nodiscard]] std::string cycle_notation(Permutation const& p);

  struct PermutatorGroup {
    SetIndex base = 0;
    // Roundtrip words from_rep(P) a to_rep(Q), one per distinct restriction.
    std::vector<Word> witnesses;
    // The same roundtrips as permutations of the points of base, indexed by
    // position in base.points().
    std::vector<Permutation> restrictions;
  };

  // Contracts every roundtrip P -a-> Q inside the class of R, for each
  // generator a mapping a member P bijectively onto a member Q.
  // R must be a non-singleton representative.
  [[nodiscard]] PermutatorGroup permutator_generators(Skeleton const& sk,
                                                      SetIndex        R);

  struct HolonomyGroup {
    SetIndex              representative = 0;
    std::vector<SetIndex> tiles;
    // Distinct non-identity tile permutations induced by the permutator
    // generators, each with one roundtrip witness.
    std::vector<Permutation> generators;
    std::vector<Word>        witnesses;
    // Every element of the generated group, sorted.
    std::vector<Permutation> elements;

    [[nodiscard]] std::size_t order() const noexcept {
      return elements.size();
    }
    [[nodiscard]] bool trivial() const noexcept {
      return elements.size() <= 1;
    }
    [[nodiscard]] bool contains(Permutation const& p) const;
  };

  // The permutator's induced action on tiles(R), with elements of equal
  // tile action merged. Throws BudgetExceeded if the group has more than
  // `budget` elements.
  [[nodiscard]] HolonomyGroup holonomy_group(Skeleton const&        sk,
                                             PermutatorGroup const& perm,
                                             std::size_t budget = kDefaultBudget);

  // A state of a component: tile `tile` of the component's `rep`-th
  // representative (both ordinals 0-based). The sentinel * is nullopt.
  struct Tile {
    std::size_t rep  = 0;
    std::size_t tile = 0;
    friend auto operator<=>(Tile const&, Tile const&) = default;
  };
  using Coordinate = std::optional<Tile>;

  // An element of a permutation-reset component: either a constant map onto
  // a state (possibly *), or a permutation acting on one representative's
  // tile block and as the identity on every other block and on *.
  class ComponentElement {
   public:
    static ComponentElement constant(Coordinate target);
    static ComponentElement permutation(std::size_t block, Permutation p);

    [[nodiscard]] bool is_constant() const noexcept {
      return constant_;
    }
    [[nodiscard]] Coordinate const& target() const noexcept {
      return target_;
    }
    [[nodiscard]] std::size_t block() const noexcept {
      return block_;
    }
    [[nodiscard]] Permutation const& perm() const noexcept {
      return perm_;
    }
    // Throws InvariantViolation if a tile ordinal is outside the block.
    [[nodiscard]] Coordinate apply(Coordinate const& c) const;

    friend bool operator==(ComponentElement const&, ComponentElement const&)
        = default;

   private:
    bool        constant_ = true;
    Coordinate  target_;
    std::size_t block_ = 0;
    Permutation perm_;
  };

  struct HolonomyComponent {
    std::size_t           depth = 0;
    std::vector<SetIndex> representatives;
    // One per representative, in the same order.
    std::vector<HolonomyGroup const*> groups;

    // |tiles(R_1)| + ... + |tiles(R_k)| + 1 for the sentinel.
    [[nodiscard]] std::size_t state_count() const;
    [[nodiscard]] std::size_t block_size(std::size_t rep) const {
      return groups.at(rep)->tiles.size();
    }
    [[nodiscard]] std::optional<std::size_t> ordinal_of(SetIndex R) const;
    // Product of the block orders.
    [[nodiscard]] std::size_t group_order() const;
  };

  // Holonomy groups of every non-singleton representative and the
  // components assembled from them.
  class Holonomy {
   public:
    explicit Holonomy(Skeleton const& sk, std::size_t budget = kDefaultBudget);

    Holonomy(Holonomy const&)            = delete;
    Holonomy& operator=(Holonomy const&) = delete;

    [[nodiscard]] HolonomyGroup const&   group(SetIndex R) const;
    [[nodiscard]] PermutatorGroup const& permutator(SetIndex R) const;
    [[nodiscard]] std::vector<HolonomyGroup> const& groups() const noexcept {
      return groups_;
    }
    // Throws DomainError unless 1 <= d <= levels.
    [[nodiscard]] HolonomyComponent const& component(std::size_t d) const;
    [[nodiscard]] std::vector<HolonomyComponent> const& components()
        const noexcept {
      return components_;
    }

   private:
    Skeleton const*                  sk_;
    std::vector<PermutatorGroup>     permutators_;
    std::vector<HolonomyGroup>       groups_;
    std::vector<std::size_t>         group_of_;
    std::vector<HolonomyComponent>   components_;
  };

}  // namespace holonomy
