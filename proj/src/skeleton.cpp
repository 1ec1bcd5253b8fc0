#include "holonomy/skeleton.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>

#include "holonomy/errors.hpp"

namespace holonomy {

  namespace {
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

    // Order of the permutation that t induces on P; t must map P onto P.
    std::size_t order_on(Transformation const& t, StateSubset P) {
      std::size_t order = 1;
      for (Point p : P.points()) {
        std::size_t len = 1;
        for (Point q = t[p]; q != p; q = t[q]) {
          ++len;
        }
        order = std::lcm(order, len);
      }
      return order;
    }
  }  // namespace

  struct Skeleton::OrbitCache {
    explicit OrbitCache(std::size_t n) : once(n), orbit(n) {}
    std::vector<std::once_flag>        once;
    std::vector<std::vector<SetIndex>> orbit;
  };

  Skeleton::~Skeleton() = default;

  Skeleton::Skeleton(GeneratorSet gens) : gens_(std::move(gens)) {
    build_sets();
    build_classes();
    build_witnesses();
    build_tiles();
    orbits_ = std::make_unique<OrbitCache>(classes_.size());
    build_heights();
  }

  void Skeleton::build_sets() {
    std::size_t const n    = gens_.degree();
    StateSubset const full = StateSubset::full(n);

    // Images of X under nonempty words, by breadth-first search.
    std::vector<StateSubset>          found;
    std::unordered_map<std::uint64_t, bool> seen;
    for (std::size_t a = 0; a < gens_.size(); ++a) {
      StateSubset img = act_set(full, gens_[a]);
      if (seen.emplace(img.bits(), true).second) {
        found.push_back(img);
      }
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t a = 0; a < gens_.size(); ++a) {
        StateSubset img = act_set(found[i], gens_[a]);
        if (seen.emplace(img.bits(), true).second) {
          found.push_back(img);
        }
      }
    }

    std::vector<StateSubset> all = found;
    auto add_mandatory          = [&](StateSubset s) {
      if (seen.emplace(s.bits(), false).second) {
        all.push_back(s);
      }
    };
    add_mandatory(full);
    for (Point p = 0; p < n; ++p) {
      add_mandatory(StateSubset::singleton(p));
    }
    std::sort(all.begin(), all.end(), total_order_less);

    sets_ = std::move(all);
    is_image_.assign(sets_.size(), false);
    for (SetIndex i = 0; i < sets_.size(); ++i) {
      index_.emplace(sets_[i].bits(), i);
      is_image_[i] = seen.at(sets_[i].bits());
    }
    action_.resize(sets_.size() * gens_.size());
    for (SetIndex i = 0; i < sets_.size(); ++i) {
      for (std::size_t a = 0; a < gens_.size(); ++a) {
        auto it = index_.find(act_set(sets_[i], gens_[a]).bits());
        if (it == index_.end()) {
          throw InvariantViolation("extended image set not closed under "
                                   + gens_.name(a) + " at "
                                   + sets_[i].to_string());
        }
        action_[i * gens_.size() + a] = it->second;
      }
    }
  }

  // Strongly connected components of the action graph (iterative Tarjan).
  void Skeleton::build_classes() {
    std::size_t const N = sets_.size();
    std::size_t const k = gens_.size();

    std::vector<std::size_t> index(N, kUnset), low(N, 0);
    std::vector<bool>        on_stack(N, false);
    std::vector<SetIndex>    stack;
    std::vector<std::vector<SetIndex>> components;
    std::size_t              counter = 0;

    struct Frame {
      SetIndex    node;
      std::size_t next_edge;
    };
    std::vector<Frame> calls;

    for (SetIndex root = 0; root < N; ++root) {
      if (index[root] != kUnset) {
        continue;
      }
      calls.push_back({root, 0});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!calls.empty()) {
        Frame& f = calls.back();
        if (f.next_edge < k) {
          SetIndex w = action_[f.node * k + f.next_edge++];
          if (index[w] == kUnset) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            calls.push_back({w, 0});
          } else if (on_stack[w]) {
            low[f.node] = std::min(low[f.node], index[w]);
          }
          continue;
        }
        SetIndex v = f.node;
        calls.pop_back();
        if (!calls.empty()) {
          low[calls.back().node] = std::min(low[calls.back().node], low[v]);
        }
        if (low[v] == index[v]) {
          std::vector<SetIndex> comp;
          SetIndex              w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
          } while (w != v);
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
      }
    }

    std::sort(components.begin(),
              components.end(),
              [](auto const& a, auto const& b) { return a.front() < b.front(); });
    class_of_.assign(N, 0);
    for (std::size_t c = 0; c < components.size(); ++c) {
      EquivalenceClass cls;
      cls.members        = std::move(components[c]);
      cls.representative = cls.members.front();
      cls.cardinality    = sets_[cls.representative].size();
      for (SetIndex m : cls.members) {
        if (sets_[m].size() != cls.cardinality) {
          throw InvariantViolation("equivalent sets " + sets_[m].to_string()
                                   + " and "
                                   + sets_[cls.representative].to_string()
                                   + " differ in size");
        }
        class_of_[m] = c;
      }
      classes_.push_back(std::move(cls));
    }
  }

  // from_rep(P) is the shortlex-least word taking the representative R onto
  // P. to_rep(P) starts from a shortest word v taking P onto R; since
  // g = from_rep(P) v permutes R, appending g^(ord g - 1) makes to_rep(P)
  // the inverse of from_rep(P) on P.
  void Skeleton::build_witnesses() {
    std::size_t const N   = sets_.size();
    std::size_t const k   = gens_.size();
    Transformation const id = Transformation::identity(gens_.degree());
    to_rep_.assign(N, Word{});
    from_rep_.assign(N, Word{});
    to_rep_map_.assign(N, id);
    from_rep_map_.assign(N, id);

    std::vector<std::size_t> dist(N, kUnset);
    for (EquivalenceClass const& cls : classes_) {
      if (cls.members.size() == 1) {
        continue;
      }
      SetIndex const R = cls.representative;
      std::size_t const c = class_of_[R];

      // Forward BFS from R.
      std::deque<SetIndex> queue{R};
      from_rep_[R].clear();
      std::vector<bool> reached(N, false);
      reached[R] = true;
      while (!queue.empty()) {
        SetIndex P = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < k; ++a) {
          SetIndex Q = action_[P * k + a];
          if (class_of_[Q] == c && !reached[Q]) {
            reached[Q]    = true;
            from_rep_[Q]  = from_rep_[P];
            from_rep_[Q].push_back(a);
            queue.push_back(Q);
          }
        }
      }

      // Distances to R within the class, by repeated relaxation over the
      // class (classes are small, and this keeps the choice of next letter
      // deterministic).
      for (SetIndex m : cls.members) {
        dist[m] = kUnset;
      }
      dist[R]     = 0;
      bool change = true;
      while (change) {
        change = false;
        for (SetIndex m : cls.members) {
          for (std::size_t a = 0; a < k; ++a) {
            SetIndex Q = action_[m * k + a];
            if (class_of_[Q] == c && dist[Q] != kUnset
                && dist[Q] + 1 < dist[m]) {
              dist[m] = dist[Q] + 1;
              change  = true;
            }
          }
        }
      }

      for (SetIndex P : cls.members) {
        if (!reached[P] || dist[P] == kUnset) {
          throw InvariantViolation("class member " + sets_[P].to_string()
                                   + " is not mutually reachable with "
                                   + sets_[R].to_string());
        }
        if (P == R) {
          continue;
        }
        Word     v;
        SetIndex cur = P;
        while (cur != R) {
          for (std::size_t a = 0; a < k; ++a) {
            SetIndex Q = action_[cur * k + a];
            if (class_of_[Q] == c && dist[Q] + 1 == dist[cur]) {
              v.push_back(a);
              cur = Q;
              break;
            }
          }
        }
        Transformation const from = gens_.evaluate(from_rep_[P]);
        Transformation const g    = compose(from, gens_.evaluate(v));
        std::size_t const    ord  = order_on(g, sets_[R]);
        Word                 to   = v;
        Word const           loop = concat(from_rep_[P], v);
        for (std::size_t i = 1; i < ord; ++i) {
          to = concat(to, loop);
        }
        Transformation const to_map = gens_.evaluate(to);

        for (Point p : sets_[P].points()) {
          if (!sets_[R].contains(to_map[p]) || from[to_map[p]] != p) {
            throw InvariantViolation("witnesses for " + sets_[P].to_string()
                                     + " are not mutually inverse");
          }
        }
        if (act_set(sets_[R], from) != sets_[P]) {
          throw InvariantViolation("from_rep does not map onto "
                                   + sets_[P].to_string());
        }
        to_rep_[P]       = std::move(to);
        to_rep_map_[P]   = to_map;
        from_rep_map_[P] = from;
      }
    }
  }

  void Skeleton::build_tiles() {
    tiles_.assign(sets_.size(), {});
    for (SetIndex P = 0; P < sets_.size(); ++P) {
      if (sets_[P].is_singleton()) {
        continue;
      }
      std::vector<SetIndex>& tiles = tiles_[P];
      // Larger sets come first, so a proper subset is maximal iff no tile
      // accepted so far contains it.
      for (SetIndex Q = P + 1; Q < sets_.size(); ++Q) {
        if (!sets_[Q].proper_subset_of(sets_[P])) {
          continue;
        }
        bool covered = std::any_of(tiles.begin(), tiles.end(), [&](SetIndex T) {
          return sets_[Q].subset_of(sets_[T]);
        });
        if (!covered) {
          tiles.push_back(Q);
        }
      }
    }
  }

  std::vector<SetIndex> const& Skeleton::orbit(SetIndex P) const {
    std::size_t const c = class_of(P);
    std::call_once(orbits_->once[c], [this, c] {
      std::size_t const     k = gens_.size();
      std::vector<bool>     seen(sets_.size(), false);
      std::vector<SetIndex> out;
      SetIndex const        start = classes_[c].representative;
      seen[start]                 = true;
      out.push_back(start);
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
          SetIndex Q = action_[out[i] * k + a];
          if (!seen[Q]) {
            seen[Q] = true;
            out.push_back(Q);
          }
        }
      }
      std::sort(out.begin(), out.end());
      orbits_->orbit[c] = std::move(out);
    });
    return orbits_->orbit[c];
  }

  bool Skeleton::subduction_holds(SetIndex P, SetIndex Q) const {
    StateSubset const target = sets_.at(P);
    std::vector<SetIndex> const& orb = orbit(Q);
    return std::any_of(orb.begin(), orb.end(), [&](SetIndex R) {
      return target.subset_of(sets_[R]);
    });
  }

  void Skeleton::build_heights() {
    std::size_t const N = sets_.size();
    height_.assign(N, 0);

    std::vector<std::size_t> nontrivial;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (classes_[c].cardinality > 1) {
        nontrivial.push_back(c);
      }
    }
    std::size_t const m = nontrivial.size();
    // below[i] lists the classes strictly subducting class nontrivial[i].
    std::vector<std::vector<std::size_t>> below(m);
    for (std::size_t i = 0; i < m; ++i) {
      SetIndex const Ri = classes_[nontrivial[i]].representative;
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) {
          continue;
        }
        SetIndex const Rj = classes_[nontrivial[j]].representative;
        if (strictly_subducts(Rj, Ri)) {
          below[i].push_back(j);
        }
      }
    }

    // Longest path, counted in nodes, by memoised DFS with cycle detection.
    enum class Mark { fresh, active, done };
    std::vector<Mark>        mark(m, Mark::fresh);
    std::vector<std::size_t> h(m, 0);
    struct Frame {
      std::size_t node;
      std::size_t next;
    };
    for (std::size_t root = 0; root < m; ++root) {
      if (mark[root] != Mark::fresh) {
        continue;
      }
      std::vector<Frame> calls{{root, 0}};
      mark[root] = Mark::active;
      h[root]    = 1;
      while (!calls.empty()) {
        Frame& f = calls.back();
        if (f.next < below[f.node].size()) {
          std::size_t const j = below[f.node][f.next++];
          if (mark[j] == Mark::active) {
            throw InvariantViolation(
                "strict subduction has a cycle through "
                + sets_[classes_[nontrivial[j]].representative].to_string());
          }
          if (mark[j] == Mark::fresh) {
            mark[j] = Mark::active;
            h[j]    = 1;
            calls.push_back({j, 0});
          }
          continue;
        }
        std::size_t const v = f.node;
        for (std::size_t j : below[v]) {
          h[v] = std::max(h[v], h[j] + 1);
        }
        mark[v] = Mark::done;
        calls.pop_back();
      }
    }

    for (std::size_t i = 0; i < m; ++i) {
      for (SetIndex member : classes_[nontrivial[i]].members) {
        height_[member] = h[i];
      }
    }
    levels_ = height_[top()];
    reps_by_depth_.assign(levels_ + 1, {});
    for (std::size_t c : nontrivial) {
      SetIndex const R = classes_[c].representative;
      reps_by_depth_[depth(R)].push_back(R);
    }
  }

  std::optional<SetIndex> Skeleton::find(StateSubset s) const {
    auto it = index_.find(s.bits());
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  SetIndex Skeleton::index_of(StateSubset s) const {
    auto it = index_.find(s.bits());
    if (it == index_.end()) {
      throw DomainError(s.to_string() + " is not in the extended image set");
    }
    return it->second;
  }

  SetIndex Skeleton::act(SetIndex i, Word const& w) const {
    for (std::size_t a : w) {
      if (a >= gens_.size()) {
        throw DomainError("letter " + std::to_string(a + 1)
                          + " is not a generator index");
      }
      i = act(i, a);
    }
    return i;
  }

  std::optional<Word> Skeleton::word_between(SetIndex P, SetIndex Q) const {
    std::size_t const                   k = gens_.size();
    std::vector<std::optional<Word>>    word(sets_.size());
    std::vector<SetIndex>               queue{P};
    word[P] = Word{};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      SetIndex cur = queue[i];
      if (cur == Q) {
        return word[cur];
      }
      for (std::size_t a = 0; a < k; ++a) {
        SetIndex next = action_[cur * k + a];
        if (!word[next]) {
          word[next] = concat(*word[cur], Word{a});
          queue.push_back(next);
        }
      }
    }
    return std::nullopt;
  }

  std::vector<SetIndex> const& Skeleton::tiles(SetIndex P) const {
    if (sets_.at(P).is_singleton()) {
      throw DomainError("singleton " + sets_[P].to_string() + " has no tiles");
    }
    return tiles_[P];
  }

  std::vector<SetIndex> const& Skeleton::representatives_at_depth(
      std::size_t d) const {
    if (d < 1 || d > levels_) {
      throw DomainError("depth " + std::to_string(d) + " outside [1.."
                        + std::to_string(levels_) + "]");
    }
    return reps_by_depth_[d];
  }

}  // namespace holonomy
