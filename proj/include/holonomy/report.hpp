#pragma once

// Text and JSON renderings of the decomposition, used by the command-line
// tool. Subsets print as sorted 1-based brace lists ("{1,2}"), the sentinel
// as "*", chains top-down, and tagged tiles as (depth,rep,tile) triples with
// 1-based ordinals. All output is a pure function of its arguments.

#include <cstddef>
#include <optional>
#include <string>

#include "holonomy/cascade.hpp"
#include "holonomy/verify.hpp"
#include "json.hpp"

namespace holonomy {

  using Json = nlohmann::ordered_json;

  [[nodiscard]] std::string format_set(Skeleton const& sk, SetIndex i);
  [[nodiscard]] std::string format_chain(Skeleton const& sk, Chain const& c);
  [[nodiscard]] std::string format_coordinate(std::size_t       level,
                                              Coordinate const& c);
  [[nodiscard]] std::string format_coordinates(Coordinates const& v);
  [[nodiscard]] std::string format_element(ComponentElement const& e,
                                           std::size_t             level);

  [[nodiscard]] std::string skeleton_text(Skeleton const&            sk,
                                          std::optional<std::size_t> semigroup_size);
  [[nodiscard]] Json        skeleton_json(Skeleton const&            sk,
                                          std::optional<std::size_t> semigroup_size);

  [[nodiscard]] std::string holonomy_text(Holonomy const& hol, Skeleton const& sk);
  [[nodiscard]] Json        holonomy_json(Holonomy const& hol, Skeleton const& sk);

  // Components per depth, then every generator's dependency values over the
  // prefixes of encoded maximal chains.
  [[nodiscard]] std::string cascade_text(Cascade const& c, std::size_t max_chains);
  [[nodiscard]] Json        cascade_json(Cascade const& c, std::size_t max_chains);

  // For t = evaluate(w): columns C, C.t and the direct lift of t applied
  // to C, one row per member.
  [[nodiscard]] std::string lift_table(Skeleton const& sk,
                                       Chain const&    c,
                                       Word const&     w);
  // Columns depth, C^pos, enc(C^pos), alpha(C^pos).
  [[nodiscard]] std::string positioned_table(Cascade const& cascade,
                                             Chain const&   c);

  [[nodiscard]] Json verify_json(Skeleton const&     sk,
                                 VerifyReport const& embedding,
                                 VerifyReport const& division);

}  // namespace holonomy
