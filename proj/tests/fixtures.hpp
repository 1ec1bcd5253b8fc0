#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holonomy/transformation.hpp"
#include "oracle.hpp"

namespace fixtures {

  using Images = std::vector<std::vector<int>>;

  inline Images const example1{{2, 1, 3}, {1, 2, 2}};

  inline Images const example2{{1, 2, 3, 1, 1, 1},
                               {4, 4, 4, 5, 4, 6},
                               {4, 4, 4, 5, 6, 4},
                               {4, 4, 4, 4, 5, 5},
                               {4, 4, 4, 1, 2, 3},
                               {2, 3, 1, 4, 4, 4}};

  // Generates the full transformation semigroup on three points.
  inline Images const t3{{2, 1, 3}, {2, 3, 1}, {1, 2, 1}};

  inline holonomy::GeneratorSet gens(Images const& images) {
    std::vector<holonomy::Transformation> ts;
    for (auto const& v : images) {
      ts.push_back(holonomy::Transformation::from_one_based(v));
    }
    return holonomy::GeneratorSet(std::move(ts));
  }

  inline std::vector<oracle::Map> maps(Images const& images) {
    std::vector<oracle::Map> out;
    for (auto const& v : images) {
      out.push_back(oracle::from_one_based(v));
    }
    return out;
  }

  inline std::vector<std::uint64_t> random_seeds() {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s <= 20; ++s) {
      out.push_back(s * 7919);
    }
    return out;
  }

  // Examples 1-3 and 20 seeded random sets with n <= 6 and at most four
  // generators.
  struct Case {
    std::string name;
    Images      images;
  };

  inline std::vector<Case> corpus() {
    std::vector<Case> out{{"example1", example1}, {"example2", example2}, {"t3", t3}};
    for (std::uint64_t s : random_seeds()) {
      out.push_back({"random" + std::to_string(s), oracle::random_generators(s, 6, 4)});
    }
    return out;
  }

}  // namespace fixtures
