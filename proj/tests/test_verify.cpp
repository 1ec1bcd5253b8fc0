#include "doctest.h"
#include "fixtures.hpp"
#include "holonomy/verify.hpp"

using namespace holonomy;

TEST_CASE("random words are reproducible and within bounds") {
  auto const a = random_words(3, 200, 42, 5);
  auto const b = random_words(3, 200, 42, 5);
  CHECK(a == b);
  CHECK(a != random_words(3, 200, 43, 5));
  REQUIRE(a.size() == 200);
  for (Word const& w : a) {
    CHECK(w.size() >= 1);
    CHECK(w.size() <= 5);
    for (std::size_t x : w) {
      CHECK(x < 3);
    }
  }
}

TEST_CASE("all words up to a length") {
  auto const w = all_words(2, 3);
  CHECK(w.size() == 2 + 4 + 8);
  CHECK(w.front() == Word{0});
  CHECK(w[2] == Word{0, 0});
  CHECK(w.back() == Word{1, 1, 1});
}

TEST_CASE("verification passes on the worked examples") {
  for (auto const& images : {fixtures::example1, fixtures::example2, fixtures::t3}) {
    Decomposition const d(fixtures::gens(images));
    VerifyOptions       o;
    o.words = 200;
    auto const e = verify_embedding(d.cascade(), o);
    auto const v = verify_division(d.cascade(), o);
    CHECK(e.passed());
    CHECK(v.passed());
    CHECK(v.surjective);
    CHECK(e.words_tested == 200);
    CHECK(e.chains_tested == enumerate_maximal_chains(d.skeleton()).size());
  }
}

TEST_CASE("zero words is a vacuous pass") {
  Decomposition const d(fixtures::gens(fixtures::example1));
  VerifyOptions       o;
  o.words = 0;
  auto const e = verify_embedding(d.cascade(), o);
  CHECK(e.passed());
  CHECK(e.checks == 0);
}

TEST_CASE("an injected fault is caught") {
  Decomposition d(fixtures::gens(fixtures::example1));
  REQUIRE(inject_fault(d.cascade()));
  VerifyOptions o;
  o.words      = 100;
  auto const e = verify_embedding(d.cascade(), o);
  CHECK_FALSE(e.passed());
  CHECK(e.violation_count > 0);
  CHECK(e.violations.size() <= o.max_recorded);
  CHECK_FALSE(verify_division(d.cascade(), o).passed());
}

TEST_CASE("no levels, nothing to corrupt") {
  Decomposition d(fixtures::gens({{1}}));
  CHECK_FALSE(inject_fault(d.cascade()));
  VerifyOptions o;
  o.words = 10;
  CHECK(verify_embedding(d.cascade(), o).passed());
  CHECK(verify_division(d.cascade(), o).passed());
}
