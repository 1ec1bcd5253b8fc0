#include "holonomy/semigroup.hpp"

#include "holonomy/errors.hpp"

namespace holonomy {

  std::optional<std::size_t> TransformationSemigroup::position(
      Transformation const& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  TransformationSemigroup enumerate(GeneratorSet const& gens,
                                    std::size_t         budget) {
    TransformationSemigroup ts;
    ts.gens_ = gens;

    auto add = [&ts, budget](Transformation t, Word w) {
      if (ts.index_.contains(t)) {
        return;
      }
      if (ts.elements_.size() >= budget) {
        throw BudgetExceeded("semigroup enumeration", budget);
      }
      ts.index_.emplace(t, ts.elements_.size());
      ts.elements_.push_back(std::move(t));
      ts.witnesses_.push_back(std::move(w));
    };

    for (std::size_t a = 0; a < gens.size(); ++a) {
      add(gens[a], Word{a});
    }
    // The element list doubles as the BFS queue; it grows while we scan it.
    for (std::size_t i = 0; i < ts.elements_.size(); ++i) {
      for (std::size_t a = 0; a < gens.size(); ++a) {
        Transformation product = compose(ts.elements_[i], gens[a]);
        if (!ts.index_.contains(product)) {
          Word w = ts.witnesses_[i];
          w.push_back(a);
          add(std::move(product), std::move(w));
        }
      }
    }
    ts.is_monoid_ = ts.index_.contains(Transformation::identity(gens.degree()));
    return ts;
  }

}  // namespace holonomy
