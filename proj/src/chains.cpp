#include "holonomy/chains.hpp"

#include <algorithm>
#include <set>

#include "holonomy/errors.hpp"

namespace holonomy {

  std::vector<Chain> enumerate_maximal_chains(Skeleton const& sk,
                                              std::size_t     max_chains) {
    std::vector<Chain> out;
    // Explicit stack of (chain so far, next tile to try).
    Chain                    current{Skeleton::top()};
    std::vector<std::size_t> next{0};
    while (!current.empty()) {
      SetIndex const last = current.back();
      if (sk.is_singleton(last)) {
        if (out.size() >= max_chains) {
          throw BudgetExceeded("maximal chain enumeration", max_chains);
        }
        out.push_back(current);
        current.pop_back();
        next.pop_back();
        continue;
      }
      std::vector<SetIndex> const& tiles = sk.tiles(last);
      if (next.back() == tiles.size()) {
        current.pop_back();
        next.pop_back();
        continue;
      }
      current.push_back(tiles[next.back()++]);
      next.push_back(0);
    }
    return out;
  }

  bool is_maximal_chain(Skeleton const& sk, Chain const& c) {
    if (c.empty() || c.front() != Skeleton::top() || !sk.is_singleton(c.back())) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      auto const& tiles = sk.tiles(c[i]);
      if (std::find(tiles.begin(), tiles.end(), c[i + 1]) == tiles.end()) {
        return false;
      }
    }
    return true;
  }

  Point eta(Skeleton const& sk, Chain const& c) {
    if (c.empty() || !sk.is_singleton(c.back())) {
      throw DomainError("chain does not end in a singleton");
    }
    return sk.set(c.back()).first();
  }

  Chain dominate(Skeleton const& sk, Chain c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (!sk.set(c[i + 1]).proper_subset_of(sk.set(c[i]))) {
        throw DomainError(sk.set(c[i]).to_string() + " and "
                          + sk.set(c[i + 1]).to_string()
                          + " are not comparable, so this is not a chain");
      }
    }
    if (c.empty() || c.front() != Skeleton::top()) {
      c.insert(c.begin(), Skeleton::top());
    }

    // Between consecutive members U > W the least insertable set is the
    // least tile of U properly containing W; below the last member it is the
    // least tile of that member.
    Chain out;
    out.reserve(c.size() + 4);
    for (std::size_t i = 0; i < c.size(); ++i) {
      out.push_back(c[i]);
      if (i + 1 == c.size()) {
        break;
      }
      StateSubset const W   = sk.set(c[i + 1]);
      SetIndex          cur = c[i];
      while (true) {
        auto const& tiles = sk.tiles(cur);
        auto it = std::find_if(tiles.begin(), tiles.end(), [&](SetIndex T) {
          return W.proper_subset_of(sk.set(T));
        });
        if (it == tiles.end()) {
          break;
        }
        cur = *it;
        out.push_back(cur);
      }
    }
    while (!sk.is_singleton(out.back())) {
      out.push_back(sk.tiles(out.back()).front());
    }
    return out;
  }

  Chain act_chain(Skeleton const& sk, Chain const& c, std::size_t a) {
    Chain out;
    out.reserve(c.size());
    for (SetIndex P : c) {
      SetIndex Q = sk.act(P, a);
      if (out.empty() || out.back() != Q) {
        out.push_back(Q);
      }
    }
    return out;
  }

  Chain act_chain(Skeleton const& sk, Chain const& c, Transformation const& t) {
    Chain out;
    out.reserve(c.size());
    for (SetIndex P : c) {
      SetIndex Q = sk.act(P, t);
      if (out.empty() || out.back() != Q) {
        out.push_back(Q);
      }
    }
    return out;
  }

  Chain lift_element(Skeleton const& sk, Transformation const& t, Chain const& c) {
    return dominate(sk, act_chain(sk, c, t));
  }

  bool agree_down_to(Chain const& c, Chain const& d, SetIndex P) {
    auto ic = std::find(c.begin(), c.end(), P);
    auto id = std::find(d.begin(), d.end(), P);
    if (ic == c.end() || id == d.end()) {
      return false;
    }
    return std::equal(c.begin(), ic + 1, d.begin(), id + 1);
  }

  LiftedGenerator::LiftedGenerator(Skeleton const& sk, std::size_t generator)
      : sk_(&sk), generator_(generator) {
    if (generator >= sk.generators().size()) {
      throw DomainError("generator " + std::to_string(generator + 1)
                        + " out of range");
    }
  }

  Chain LiftedGenerator::operator()(Chain const& c) const {
    return dominate(*sk_, act_chain(*sk_, c, generator_));
  }

  LiftedGenerator lift_generator(Skeleton const& sk, std::size_t a) {
    return LiftedGenerator(sk, a);
  }

  Chain apply_lift_word(Skeleton const& sk, Word const& w, Chain c) {
    for (std::size_t a : w) {
      c = LiftedGenerator(sk, a)(c);
    }
    return c;
  }

  PositionedChain position(Skeleton const& sk, Chain const& c) {
    PositionedChain p;
    p.slots.assign(sk.levels(), std::nullopt);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      std::size_t const d = sk.depth(c[k]);
      if (d < 1 || d > sk.levels() || p.slots[d - 1]) {
        throw InvariantViolation("chain member " + sk.set(c[k]).to_string()
                                 + " has no free slot at depth "
                                 + std::to_string(d));
      }
      p.slots[d - 1] = c[k + 1];
    }
    return p;
  }

  Chain unposition(Skeleton const&, PositionedChain const& p) {
    Chain c{Skeleton::top()};
    for (auto const& slot : p.slots) {
      if (slot) {
        c.push_back(*slot);
      }
    }
    return c;
  }

  std::vector<SetIndex> alpha(Skeleton const&, PositionedChain const& p) {
    std::vector<SetIndex> out(p.slots.size());
    SetIndex              current = Skeleton::top();
    for (std::size_t i = 0; i < p.slots.size(); ++i) {
      out[i] = current;
      if (p.slots[i]) {
        current = *p.slots[i];
      }
    }
    return out;
  }

  SetIndex alpha_at(PositionedChain const& p, std::size_t level) {
    for (std::size_t j = std::min(level, p.slots.size() + 1) - 1; j > 0; --j) {
      if (p.slots[j - 1]) {
        return *p.slots[j - 1];
      }
    }
    return Skeleton::top();
  }

  ChainSemigroup::ChainSemigroup(Skeleton const& sk, std::size_t max_chains)
      : sk_(&sk), chains_(enumerate_maximal_chains(sk, max_chains)) {
    for (std::size_t i = 0; i < chains_.size(); ++i) {
      index_.emplace(chains_[i], i);
    }
    std::size_t const k = sk.generators().size();
    table_.resize(k * chains_.size());
    for (std::size_t a = 0; a < k; ++a) {
      LiftedGenerator const lift(sk, a);
      for (std::size_t c = 0; c < chains_.size(); ++c) {
        table_[a * chains_.size() + c] = index_of(lift(chains_[c]));
      }
    }
  }

  std::size_t ChainSemigroup::index_of(Chain const& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) {
      throw InvariantViolation("not a maximal chain of this skeleton");
    }
    return it->second;
  }

  std::size_t ChainSemigroup::lift_word(Word const& w, std::size_t c) const {
    for (std::size_t a : w) {
      if (a >= sk_->generators().size()) {
        throw DomainError("letter " + std::to_string(a + 1)
                          + " is not a generator index");
      }
      c = lift(a, c);
    }
    return c;
  }

  std::vector<std::vector<std::size_t>> ChainSemigroup::enumerate_elements(
      std::size_t budget) const {
    std::size_t const                     k = sk_->generators().size();
    std::size_t const                     m = chains_.size();
    std::vector<std::vector<std::size_t>> out;
    std::set<std::vector<std::size_t>>    seen;
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<std::size_t> t(table_.begin() + a * m,
                                 table_.begin() + (a + 1) * m);
      if (seen.insert(t).second) {
        out.push_back(std::move(t));
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        std::vector<std::size_t> t(m);
        for (std::size_t c = 0; c < m; ++c) {
          t[c] = lift(a, out[i][c]);
        }
        if (seen.insert(t).second) {
          if (out.size() >= budget) {
            throw BudgetExceeded("chain semigroup enumeration", budget);
          }
          out.push_back(std::move(t));
        }
      }
    }
    return out;
  }

}  // namespace holonomy
