#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/semigroup.hpp"
#include "oracle.hpp"

using namespace holonomy;

namespace {

  Transformation random_map(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<Point> d(0, static_cast<Point>(n - 1));
    std::vector<Point>                   v(n);
    for (auto& x : v) {
      x = d(rng);
    }
    return Transformation(v);
  }

  StateSubset random_subset(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << n) - 1);
    StateSubset                                  s;
    std::uint64_t const                          bits = d(rng);
    for (Point p = 0; p < n; ++p) {
      if (bits >> p & 1U) {
        s = s | StateSubset::singleton(p);
      }
    }
    return s;
  }

}  // namespace

TEST_CASE("compose applies the left argument first") {
  auto const f = Transformation::from_one_based({2, 1, 3});
  auto const g = Transformation::from_one_based({1, 2, 2});
  CHECK(compose(f, g) == Transformation::from_one_based({2, 1, 2}));
  CHECK(compose(g, f) == Transformation::from_one_based({2, 1, 1}));
  CHECK(compose(f, Transformation::identity(3)) == f);
  CHECK(compose(Transformation::identity(3), f) == f);
}

TEST_CASE("compose is associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t const n = 1 + trial % 7;
    auto const        f = random_map(rng, n);
    auto const        g = random_map(rng, n);
    auto const        h = random_map(rng, n);
    REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("compose rejects mismatched degrees") {
  CHECK_THROWS_AS((void)compose(Transformation::identity(2), Transformation::identity(3)),
                  DomainError);
}

TEST_CASE("transformations validate their images") {
  CHECK_THROWS_AS(Transformation::from_one_based({1, 4, 2}), DomainError);
  CHECK_THROWS_AS(Transformation::from_one_based({0, 1}), DomainError);
  auto const t = Transformation::from_one_based({2, 1, 3});
  CHECK(t.is_permutation());
  CHECK_FALSE(t.is_identity());
  CHECK(t.to_string() == "[2,1,3]");
  CHECK(t.to_one_based() == std::vector<int>{2, 1, 3});
}

TEST_CASE("act_set follows the action law") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t const n = 1 + trial % 6;
    auto const        P = random_subset(rng, n);
    auto const        f = random_map(rng, n);
    auto const        g = random_map(rng, n);
    REQUIRE(act_set(act_set(P, f), g) == act_set(P, compose(f, g)));
    REQUIRE(act_set(P, Transformation::identity(n)) == P);
    REQUIRE(act_set(P, f).size() <= P.size());
  }
  CHECK(act_set(StateSubset::from_one_based({1, 2, 3}), Transformation::from_one_based({1, 2, 2}))
        == StateSubset::from_one_based({1, 2}));
  CHECK(act_set(StateSubset{}, Transformation::identity(3)).empty());
}

TEST_CASE("subsets print as sorted brace lists") {
  CHECK(StateSubset::from_one_based({3, 1}).to_string() == "{1,3}");
  CHECK(StateSubset::full(4).to_string() == "{1,2,3,4}");
  CHECK(StateSubset::from_one_based({2}).is_singleton());
}

TEST_CASE("total order: larger sets first, then lexicographic") {
  std::vector<StateSubset> const order{StateSubset::from_one_based({1, 2, 3}),
                                       StateSubset::from_one_based({1, 2}),
                                       StateSubset::from_one_based({1, 3}),
                                       StateSubset::from_one_based({2, 3}),
                                       StateSubset::from_one_based({1}),
                                       StateSubset::from_one_based({2}),
                                       StateSubset::from_one_based({3})};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      CHECK(total_order_less(order[i], order[j]) == (i < j));
    }
  }
}

TEST_CASE("evaluate reads words left to right") {
  GeneratorSet const gens = fixtures::gens(fixtures::example1);
  CHECK(gens.evaluate({1, 0}) == Transformation::from_one_based({2, 1, 1}));
  CHECK(gens.evaluate({}).is_identity());
  CHECK(gens.format({1, 0}) == "s2 s1");
  CHECK(gens.format({}) == "id");
  CHECK(evaluate({0}, gens) == gens[0]);
}

TEST_CASE("generator sets validate degree") {
  CHECK_THROWS_AS(GeneratorSet(std::vector<Transformation>{}), DomainError);
  CHECK_THROWS_AS(GeneratorSet({Transformation::identity(2), Transformation::identity(3)}),
                  DomainError);
}

TEST_CASE("enumerate agrees with brute-force closure") {
  for (auto const& c : fixtures::corpus()) {
    CAPTURE(c.name);
    auto const S = enumerate(fixtures::gens(c.images));
    REQUIRE(S.size() == oracle::closure(fixtures::maps(c.images)).size());
    for (std::size_t i = 0; i < S.size(); ++i) {
      REQUIRE(S.generators().evaluate(S.witness(i)) == S.element(i));
      REQUIRE(S.position(S.element(i)) == i);
      if (i > 0) {
        REQUIRE(S.witness(i - 1).size() <= S.witness(i).size());
      }
    }
  }
}

TEST_CASE("semigroup sizes of the worked examples") {
  CHECK(enumerate(fixtures::gens(fixtures::example1)).size() == 6);
  CHECK(enumerate(fixtures::gens(fixtures::example2)).size() == 138);
  auto const t3 = enumerate(fixtures::gens(fixtures::t3));
  CHECK(t3.size() == 27);
  CHECK(t3.is_monoid());
  CHECK_FALSE(enumerate(fixtures::gens({{1, 2, 2}})).is_monoid());
}

TEST_CASE("duplicate generators do not change the semigroup") {
  auto const a = enumerate(fixtures::gens(fixtures::example1));
  auto const b = enumerate(fixtures::gens({{2, 1, 3}, {1, 2, 2}, {2, 1, 3}}));
  CHECK(a.size() == b.size());
  for (auto const& t : a.elements()) {
    CHECK(b.contains(t));
  }
}

TEST_CASE("enumerate honours the element budget") {
  CHECK_THROWS_AS((void)enumerate(fixtures::gens(fixtures::t3), 10), BudgetExceeded);
  CHECK_NOTHROW((void)enumerate(fixtures::gens(fixtures::t3), 27));
  try {
    (void)enumerate(fixtures::gens(fixtures::t3), 10);
  } catch (BudgetExceeded const& e) {
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("identity-only semigroup") {
  auto const S = enumerate(fixtures::gens({{1, 2, 3}}));
  CHECK(S.size() == 1);
  CHECK(S.is_monoid());
}
