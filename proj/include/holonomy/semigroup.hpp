#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "holonomy/transformation.hpp"

namespace holonomy {

  inline constexpr std::size_t kDefaultBudget = 1'000'000;

  // The closure of a generating set under composition, each element paired
  // with its shortlex-least witness word. Elements are stored in discovery
  // order, which is the shortlex order of their witnesses.
  class TransformationSemigroup {
   public:
    [[nodiscard]] GeneratorSet const& generators() const noexcept {
      return gens_;
    }
    [[nodiscard]] std::size_t degree() const noexcept {
      return gens_.degree();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return elements_.size();
    }
    [[nodiscard]] std::vector<Transformation> const& elements() const noexcept {
      return elements_;
    }
    [[nodiscard]] Transformation const& element(std::size_t i) const {
      return elements_[i];
    }
    [[nodiscard]] Word const& witness(std::size_t i) const {
      return witnesses_[i];
    }
    // True iff the identity map is itself an element (S = S^1).
    [[nodiscard]] bool is_monoid() const noexcept {
      return is_monoid_;
    }
    [[nodiscard]] std::optional<std::size_t> position(
        Transformation const& t) const;
    [[nodiscard]] bool contains(Transformation const& t) const {
      return position(t).has_value();
    }

    friend TransformationSemigroup enumerate(GeneratorSet const& gens,
                                             std::size_t         budget);

   private:
    GeneratorSet                                    gens_;
    std::vector<Transformation>                     elements_;
    std::vector<Word>                               witnesses_;
    std::unordered_map<Transformation, std::size_t> index_;
    bool                                            is_monoid_ = false;
  };

  // Breadth-first closure by right multiplication with the generators.
  // Throws BudgetExceeded once more than `budget` elements are found.
  [[nodiscard]] TransformationSemigroup enumerate(
      GeneratorSet const& gens,
      std::size_t         budget = kDefaultBudget);

}  // namespace holonomy
