#include "holonomy/holonomy_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "holonomy/errors.hpp"

namespace holonomy {

  namespace {
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  }

  Permutation identity_permutation(std::size_t m) {
    Permutation p(m);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
  }

  bool is_identity(Permutation const& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != i) {
        return false;
      }
    }
    return true;
  }

  Permutation multiply(Permutation const& p, Permutation const& q) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i] = q[p[i]];
    }
    return out;
  }

  std::string cycle_notation(Permutation const& p) {
    std::string       out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (done[i] || p[i] == i) {
        continue;
      }
      out += '(';
      for (std::size_t j = i; !done[j]; j = p[j]) {
        done[j] = true;
        if (j != i) {
          out += ' ';
        }
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  PermutatorGroup permutator_generators(Skeleton const& sk, SetIndex R) {
    if (sk.is_singleton(R) || !sk.is_representative(R)) {
      throw DomainError(sk.set(R).to_string()
                        + " is not a non-singleton representative");
    }
    GeneratorSet const&       gens   = sk.generators();
    EquivalenceClass const&   cls    = sk.classes()[sk.class_of(R)];
    std::vector<Point> const  points = sk.set(R).points();
    std::vector<std::size_t>  position(sk.degree(), kNone);
    for (std::size_t i = 0; i < points.size(); ++i) {
      position[points[i]] = i;
    }

    PermutatorGroup out;
    out.base = R;
    std::set<Permutation> seen;
    for (SetIndex P : cls.members) {
      for (std::size_t a = 0; a < gens.size(); ++a) {
        SetIndex const Q = sk.act(P, a);
        if (!sk.equivalent(P, Q)) {
          continue;
        }
        Transformation const t
            = compose(compose(sk.from_rep_map(P), gens[a]), sk.to_rep_map(Q));
        Permutation perm(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
          std::size_t const j = position[t[points[i]]];
          if (j == kNone) {
            throw InvariantViolation("roundtrip through "
                                     + sk.set(P).to_string() + " and "
                                     + gens.name(a) + " leaves "
                                     + sk.set(R).to_string());
          }
          perm[i] = j;
        }
        std::vector<std::size_t> sorted_img(perm);
        std::sort(sorted_img.begin(), sorted_img.end());
        if (std::adjacent_find(sorted_img.begin(), sorted_img.end())
            != sorted_img.end()) {
          throw InvariantViolation("roundtrip restriction to "
                                   + sk.set(R).to_string()
                                   + " is not a bijection");
        }
        if (seen.insert(perm).second) {
          out.witnesses.push_back(
              concat(concat(sk.from_rep(P), Word{a}), sk.to_rep(Q)));
          out.restrictions.push_back(std::move(perm));
        }
      }
    }
    return out;
  }

  bool HolonomyGroup::contains(Permutation const& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }

  HolonomyGroup holonomy_group(Skeleton const&        sk,
                               PermutatorGroup const& perm,
                               std::size_t            budget) {
    SetIndex const R = perm.base;
    HolonomyGroup  out;
    out.representative = R;
    out.tiles          = sk.tiles(R);

    std::vector<Point> const points = sk.set(R).points();
    std::vector<std::size_t> tile_pos(sk.size(), kNone);
    for (std::size_t i = 0; i < out.tiles.size(); ++i) {
      tile_pos[out.tiles[i]] = i;
    }

    std::set<Permutation> seen;
    for (std::size_t g = 0; g < perm.restrictions.size(); ++g) {
      // Rebuild the point map on R from the restriction.
      std::vector<Point> img(sk.degree());
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t i = 0; i < points.size(); ++i) {
        img[points[i]] = points[perm.restrictions[g][i]];
      }
      Transformation const t(std::move(img));
      Permutation          on_tiles(out.tiles.size());
      for (std::size_t i = 0; i < out.tiles.size(); ++i) {
        auto const image = sk.find(act_set(sk.set(out.tiles[i]), t));
        if (!image || tile_pos[*image] == kNone) {
          throw InvariantViolation("permutator element does not permute the "
                                   "tiles of "
                                   + sk.set(R).to_string());
        }
        on_tiles[i] = tile_pos[*image];
      }
      if (!is_identity(on_tiles) && seen.insert(on_tiles).second) {
        out.generators.push_back(std::move(on_tiles));
        out.witnesses.push_back(perm.witnesses[g]);
      }
    }

    // Closure of the generators.
    std::set<Permutation> group{identity_permutation(out.tiles.size())};
    std::vector<Permutation> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (Permutation const& x : frontier) {
        for (Permutation const& g : out.generators) {
          Permutation y = multiply(x, g);
          if (group.insert(y).second) {
            if (group.size() > budget) {
              throw BudgetExceeded("holonomy group of " + sk.set(R).to_string(),
                                   budget);
            }
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    out.elements.assign(group.begin(), group.end());
    return out;
  }

  ComponentElement ComponentElement::constant(Coordinate target) {
    ComponentElement e;
    e.constant_ = true;
    e.target_   = target;
    return e;
  }

  ComponentElement ComponentElement::permutation(std::size_t block,
                                                 Permutation p) {
    ComponentElement e;
    e.constant_ = false;
    e.block_    = block;
    e.perm_     = std::move(p);
    return e;
  }

  Coordinate ComponentElement::apply(Coordinate const& c) const {
    if (constant_) {
      return target_;
    }
    if (!c || c->rep != block_) {
      return c;
    }
    if (c->tile >= perm_.size()) {
      throw InvariantViolation("tile ordinal " + std::to_string(c->tile + 1)
                               + " outside block of size "
                               + std::to_string(perm_.size()));
    }
    return Tile{block_, perm_[c->tile]};
  }

  std::size_t HolonomyComponent::state_count() const {
    std::size_t n = 1;
    for (HolonomyGroup const* g : groups) {
      n += g->tiles.size();
    }
    return n;
  }

  std::optional<std::size_t> HolonomyComponent::ordinal_of(SetIndex R) const {
    auto it = std::find(representatives.begin(), representatives.end(), R);
    if (it == representatives.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - representatives.begin());
  }

  std::size_t HolonomyComponent::group_order() const {
    std::size_t n = 1;
    for (HolonomyGroup const* g : groups) {
      n *= g->order();
    }
    return n;
  }

  Holonomy::Holonomy(Skeleton const& sk, std::size_t budget) : sk_(&sk) {
    group_of_.assign(sk.size(), kNone);
    for (EquivalenceClass const& cls : sk.classes()) {
      if (cls.cardinality < 2) {
        continue;
      }
      permutators_.push_back(permutator_generators(sk, cls.representative));
      groups_.push_back(holonomy_group(sk, permutators_.back(), budget));
      group_of_[cls.representative] = groups_.size() - 1;
    }
    for (std::size_t d = 1; d <= sk.levels(); ++d) {
      HolonomyComponent comp;
      comp.depth           = d;
      comp.representatives = sk.representatives_at_depth(d);
      for (SetIndex R : comp.representatives) {
        comp.groups.push_back(&groups_[group_of_[R]]);
      }
      components_.push_back(std::move(comp));
    }
  }

  HolonomyGroup const& Holonomy::group(SetIndex R) const {
    if (R >= group_of_.size() || group_of_[R] == kNone) {
      throw DomainError("no holonomy group for set index "
                        + std::to_string(R));
    }
    return groups_[group_of_[R]];
  }

  PermutatorGroup const& Holonomy::permutator(SetIndex R) const {
    if (R >= group_of_.size() || group_of_[R] == kNone) {
      throw DomainError("no permutator group for set index "
                        + std::to_string(R));
    }
    return permutators_[group_of_[R]];
  }

  HolonomyComponent const& Holonomy::component(std::size_t d) const {
    if (d < 1 || d > components_.size()) {
      throw DomainError("depth " + std::to_string(d) + " outside [1.."
                        + std::to_string(components_.size()) + "]");
    }
    return components_[d - 1];
  }

}  // namespace holonomy
