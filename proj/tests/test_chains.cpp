#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "holonomy/chains.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/verify.hpp"
#include "oracle.hpp"

using namespace holonomy;

namespace {

  SetIndex idx(Skeleton const& sk, std::initializer_list<int> pts) {
    return sk.index_of(StateSubset::from_one_based(pts));
  }

  std::vector<oracle::Mask> masks(Skeleton const& sk, Chain const& c) {
    std::vector<oracle::Mask> out;
    for (SetIndex P : c) {
      out.push_back(sk.set(P).bits());
    }
    return out;
  }

  std::vector<Chain> lift_table_of(Skeleton const& sk, std::vector<Chain> const& chains,
                                   Transformation const& t) {
    std::vector<Chain> out;
    for (Chain const& C : chains) {
      out.push_back(lift_element(sk, t, C));
    }
    return out;
  }

}  // namespace

TEST_CASE("Example 1 maximal chains") {
  Skeleton const sk(fixtures::gens(fixtures::example1));
  auto const     chains = enumerate_maximal_chains(sk);
  REQUIRE(chains.size() == 3);
  CHECK(chains[0] == Chain{0, idx(sk, {1, 2}), idx(sk, {1})});
  CHECK(chains[1] == Chain{0, idx(sk, {1, 2}), idx(sk, {2})});
  CHECK(chains[2] == Chain{0, idx(sk, {3})});
  for (Chain const& c : chains) {
    CHECK(is_maximal_chain(sk, c));
  }
  CHECK(eta(sk, chains[1]) == 1);
  CHECK_FALSE(is_maximal_chain(sk, Chain{0, idx(sk, {1})}));
}

TEST_CASE("maximal chains agree with brute force") {
  for (auto const& c : fixtures::corpus()) {
    CAPTURE(c.name);
    Skeleton const sk(fixtures::gens(c.images));
    auto const     expect = oracle::maximal_chains(
        oracle::extended_images(fixtures::maps(c.images)), sk.set(0).bits());
    auto const chains = enumerate_maximal_chains(sk);
    REQUIRE(chains.size() == expect.size());
    for (Chain const& ch : chains) {
      REQUIRE(expect.count(masks(sk, ch)) == 1);
    }
  }
  CHECK(enumerate_maximal_chains(Skeleton(fixtures::gens(fixtures::t3))).size() == 6);
  CHECK(enumerate_maximal_chains(Skeleton(fixtures::gens({{1}}))) == std::vector<Chain>{{0}});
}

TEST_CASE("chain enumeration budget") {
  Skeleton const sk(fixtures::gens(fixtures::t3));
  CHECK_THROWS_AS((void)enumerate_maximal_chains(sk, 5), BudgetExceeded);
}

TEST_CASE("dominate") {
  Skeleton const sk1(fixtures::gens(fixtures::example1));
  CHECK(dominate(sk1, {idx(sk1, {1, 2}), idx(sk1, {2})})
        == Chain{0, idx(sk1, {1, 2}), idx(sk1, {2})});
  for (Chain const& c : enumerate_maximal_chains(sk1)) {
    CHECK(dominate(sk1, c) == c);
  }
  CHECK_THROWS_AS((void)dominate(sk1, {idx(sk1, {1}), idx(sk1, {3})}), DomainError);

  Skeleton const sk3(fixtures::gens(fixtures::t3));
  CHECK(dominate(sk3, {idx(sk3, {3})}) == Chain{0, idx(sk3, {1, 3}), idx(sk3, {3})});
}

TEST_CASE("dominate returns a maximal chain containing its input") {
  for (auto const& c : fixtures::corpus()) {
    CAPTURE(c.name);
    Skeleton const sk(fixtures::gens(c.images));
    for (Chain const& C : enumerate_maximal_chains(sk)) {
      for (std::size_t a = 0; a < sk.generators().size(); ++a) {
        Chain const moved = act_chain(sk, C, a);
        Chain const D     = dominate(sk, moved);
        REQUIRE(is_maximal_chain(sk, D));
        REQUIRE(oracle::contains_all(masks(sk, D), masks(sk, moved)));
        REQUIRE(dominate(sk, D) == D);
      }
    }
  }
}

TEST_CASE("Example 1 lift of t = s2 s1") {
  Skeleton const sk(fixtures::gens(fixtures::example1));
  Chain const    C{0, idx(sk, {1, 2}), idx(sk, {1})};
  auto const     t = Transformation::from_one_based({2, 1, 1});
  CHECK(act_chain(sk, C, t) == Chain{idx(sk, {1, 2}), idx(sk, {2})});
  CHECK(lift_element(sk, t, C) == Chain{0, idx(sk, {1, 2}), idx(sk, {2})});
  CHECK(apply_lift_word(sk, {1, 0}, C) == lift_element(sk, t, C));
}

TEST_CASE("T3: permutations and the elementary collapse lift uniquely") {
  Skeleton const     sk(fixtures::gens(fixtures::t3));
  auto const         chains = enumerate_maximal_chains(sk);
  std::vector<std::vector<oracle::Mask>> mchains;
  for (Chain const& c : chains) {
    mchains.push_back(masks(sk, c));
  }
  for (std::size_t a = 0; a < 3; ++a) {
    CAPTURE(a);
    auto const lifts = oracle::consistent_lifts(mchains, fixtures::maps(fixtures::t3)[a]);
    REQUIRE(lifts.size() == 1);
    for (std::size_t i = 0; i < chains.size(); ++i) {
      REQUIRE(masks(sk, LiftedGenerator(sk, a)(chains[i])) == lifts[0][i]);
    }
    if (a < 2) {
      for (Chain const& c : chains) {
        REQUIRE(act_chain(sk, c, a).size() == c.size());
      }
    }
  }
}

TEST_CASE("T3: the constant [3,3,3] lifts to one of exactly two constants") {
  Skeleton const sk(fixtures::gens(fixtures::t3));
  auto const     chains = enumerate_maximal_chains(sk);
  std::vector<std::vector<oracle::Mask>> mchains;
  for (Chain const& c : chains) {
    mchains.push_back(masks(sk, c));
  }
  auto const lifts = oracle::consistent_lifts(mchains, oracle::Map{2, 2, 2});
  REQUIRE(lifts.size() == 2);
  std::set<std::vector<oracle::Mask>> values;
  for (auto const& l : lifts) {
    std::set<std::vector<oracle::Mask>> const image(l.begin(), l.end());
    REQUIRE(image.size() == 1);
    values.insert(*image.begin());
  }
  CHECK(values
        == std::set<std::vector<oracle::Mask>>{{0b111, 0b101, 0b100}, {0b111, 0b110, 0b100}});

  auto const table = lift_table_of(sk, chains, Transformation::from_one_based({3, 3, 3}));
  for (Chain const& d : table) {
    CHECK(d == Chain{0, idx(sk, {1, 3}), idx(sk, {3})});
  }
}

TEST_CASE("lifts cover their generator and are consistent") {
  for (auto const& c : fixtures::corpus()) {
    CAPTURE(c.name);
    Skeleton const sk(fixtures::gens(c.images));
    auto const     chains = enumerate_maximal_chains(sk);
    for (std::size_t a = 0; a < sk.generators().size(); ++a) {
      LiftedGenerator const lift(sk, a);
      for (Chain const& C : chains) {
        Chain const D = lift(C);
        REQUIRE(eta(sk, D) == sk.generators()[a][eta(sk, C)]);
        for (Chain const& E : chains) {
          Chain const F = lift(E);
          for (SetIndex P : C) {
            if (agree_down_to(C, E, P)) {
              REQUIRE(agree_down_to(D, F, sk.act(P, a)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("lift words are consistent and project onto their value") {
  for (auto const& c : fixtures::corpus()) {
    CAPTURE(c.name);
    Skeleton const sk(fixtures::gens(c.images));
    auto const     chains = enumerate_maximal_chains(sk);
    for (Word const& w : random_words(sk.generators().size(), 50, 3, 6)) {
      Transformation const t = sk.generators().evaluate(w);
      std::vector<Chain>   images;
      for (Chain const& C : chains) {
        images.push_back(apply_lift_word(sk, w, C));
        REQUIRE(eta(sk, images.back()) == t[eta(sk, C)]);
      }
      for (std::size_t i = 0; i < chains.size(); ++i) {
        for (std::size_t j = 0; j < chains.size(); ++j) {
          for (SetIndex P : chains[i]) {
            if (agree_down_to(chains[i], chains[j], P)) {
              REQUIRE(agree_down_to(images[i], images[j], sk.act(P, t)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("position and unposition are inverse") {
  for (auto const& c : fixtures::corpus()) {
    CAPTURE(c.name);
    Skeleton const sk(fixtures::gens(c.images));
    std::set<std::vector<std::optional<SetIndex>>> seen;
    for (Chain const& C : enumerate_maximal_chains(sk)) {
      PositionedChain const p = position(sk, C);
      REQUIRE(p.slots.size() == sk.levels());
      REQUIRE(unposition(sk, p) == C);
      REQUIRE(seen.insert(p.slots).second);
      for (std::size_t k = 0; k + 1 < C.size(); ++k) {
        REQUIRE(p.slots[sk.depth(C[k]) - 1] == C[k + 1]);
      }
    }
  }
}

TEST_CASE("alpha: depth lower bound and chain-action inclusion") {
  for (auto const& c : fixtures::corpus()) {
    CAPTURE(c.name);
    Skeleton const sk(fixtures::gens(c.images));
    for (Chain const& C : enumerate_maximal_chains(sk)) {
      auto const a = alpha(sk, position(sk, C));
      REQUIRE(a.size() == sk.levels());
      for (std::size_t i = 1; i <= sk.levels(); ++i) {
        REQUIRE(sk.depth(a[i - 1]) >= i);
        REQUIRE(alpha_at(position(sk, C), i) == a[i - 1]);
      }
      for (std::size_t g = 0; g < sk.generators().size(); ++g) {
        auto const b = alpha(sk, position(sk, LiftedGenerator(sk, g)(C)));
        for (std::size_t i = 0; i < sk.levels(); ++i) {
          REQUIRE(sk.set(sk.act(a[i], g)).subset_of(sk.set(b[i])));
        }
      }
    }
  }
}

TEST_CASE("Example 2 positioned chain") {
  Skeleton const sk(fixtures::gens(fixtures::example2));
  Chain const    C{0, idx(sk, {1, 2, 3, 4}), idx(sk, {2, 4}), idx(sk, {2})};
  auto const     p = position(sk, C);
  CHECK(p.slots == std::vector<std::optional<SetIndex>>{idx(sk, {1, 2, 3, 4}), idx(sk, {2, 4}),
                                                        idx(sk, {2}), std::nullopt,
                                                        std::nullopt});
  CHECK(alpha(sk, p)
        == std::vector<SetIndex>{0, idx(sk, {1, 2, 3, 4}), idx(sk, {2, 4}), idx(sk, {2}),
                                 idx(sk, {2})});
}

TEST_CASE("chain semigroup table") {
  Skeleton const       sk(fixtures::gens(fixtures::example1));
  ChainSemigroup const cs(sk);
  REQUIRE(cs.chains().size() == 3);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(cs.chains()[cs.lift(a, c)] == LiftedGenerator(sk, a)(cs.chains()[c]));
    }
  }
  CHECK(cs.lift_word({1, 0}, 0) == cs.index_of(apply_lift_word(sk, {1, 0}, cs.chains()[0])));
  CHECK(cs.enumerate_elements().size() == 6);
}
