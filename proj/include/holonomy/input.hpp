#pragma once

// Input documents describing a generating set. Two forms are accepted:
//
//   JSON:  {"n": 3, "generators": [[2,1,3],[1,2,2]], "names": ["s1","s2"],
//           "budget": 1000000, "seed": 7}
//   text:  n=3; [2,1,3]; [1,2,2]
//
// In the text form statements are separated by ';' or newlines, '#' starts a
// comment, and a generator may be named as "a=[2,1,3]". Images are 1-based.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holonomy/transformation.hpp"

namespace holonomy {

  struct InputDocument {
    std::size_t                   degree = 0;
    std::vector<std::vector<int>> generators;
    std::vector<std::string>      names;
    std::optional<std::size_t>    budget;
    std::optional<std::uint64_t>  seed;

    // Throws DomainError if the images do not describe total maps.
    [[nodiscard]] GeneratorSet generator_set() const;
  };

  // Picks the JSON form when the first non-blank character is '{'.
  // Throws ParseError with line/field diagnostics.
  [[nodiscard]] InputDocument parse_input(std::string_view text);
  [[nodiscard]] InputDocument parse_json_input(std::string_view text);
  [[nodiscard]] InputDocument parse_text_input(std::string_view text);

}  // namespace holonomy
