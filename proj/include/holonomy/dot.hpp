#pragma once

#include <string>

#include "holonomy/holonomy_group.hpp"
#include "holonomy/skeleton.hpp"

namespace holonomy {

  // Graphviz rendering of the skeleton: one node per set, one cluster per
  // equivalence class (filled when its holonomy group is nontrivial), boxes
  // for representatives, arrows from each representative to its tiles
  // labelled with a word taking it there, dotted arrows for tiles that are
  // not images, and a depth band per level.
  [[nodiscard]] std::string skeleton_dot(Skeleton const& sk, Holonomy const& hol);

}  // namespace holonomy
