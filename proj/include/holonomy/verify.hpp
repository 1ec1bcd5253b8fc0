#pragma once

// Replay checks that the holonomy cascade emulates the chain semigroup
// (embedding) and, through the projection to singletons, the original
// semigroup (division).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "holonomy/cascade.hpp"

namespace holonomy {

  struct VerifyOptions {
    std::size_t   words           = 1000;
    std::uint64_t seed            = 0;
    std::size_t   max_word_length = 8;
    std::size_t   max_chains      = kDefaultBudget;
    // Also test every word of length 1..exhaustive_length.
    std::size_t exhaustive_length = 0;
    // Stop recording (but keep counting) violations past this many.
    std::size_t max_recorded = 20;
  };

  struct Violation {
    Word  word;
    Chain chain;
    // First differing coordinate level for the embedding check; 0 when the
    // projected point is wrong or the image left the encoded chains.
    std::size_t level = 0;
  };

  struct VerifyReport {
    std::size_t            words_tested  = 0;
    std::size_t            chains_tested = 0;
    std::size_t            checks        = 0;
    std::size_t            violation_count = 0;
    std::vector<Violation> violations;
    // Division only: every point is the bottom of some maximal chain.
    bool   surjective      = true;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool passed() const noexcept {
      return violation_count == 0 && surjective;
    }
  };

  // count words with lengths uniform in [1, max_length], letters uniform.
  [[nodiscard]] std::vector<Word> random_words(std::size_t   generators,
                                               std::size_t   count,
                                               std::uint64_t seed,
                                               std::size_t   max_length);
  // Every word of length 1..max_length in shortlex order.
  [[nodiscard]] std::vector<Word> all_words(std::size_t generators,
                                            std::size_t max_length);

  // For every tested word w and maximal chain C, the cascade of w applied to
  // enc(C) equals enc of the lift of w applied to C.
  [[nodiscard]] VerifyReport verify_embedding(Cascade const&       cascade,
                                              VerifyOptions const& opts);

  // With theta1 = eta o dec on encoded chains and theta2 mapping a word's
  // cascade to the word's value in S: theta1(z.u) = theta1(z).theta2(u),
  // and theta1 is onto the state set.
  [[nodiscard]] VerifyReport verify_division(Cascade const&       cascade,
                                             VerifyOptions const& opts);

  // Corrupts the level-1 dependency value of generator 0 so that the
  // verifiers have something to catch. Returns false if the cascade has no
  // levels.
  bool inject_fault(Cascade& cascade);

}  // namespace holonomy
