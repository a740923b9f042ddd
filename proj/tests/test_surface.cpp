#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "braidlab/surface.hpp"
#include "oracles.hpp"

using namespace braidlab;
using namespace testing;
using testing::W;

TEST_CASE("surface relator") {
  for (int g = 1; g <= 4; ++g) {
    Word const R = surface_relator(g);
    CHECK(R.size() == static_cast<std::size_t>(4 * g));
    CHECK(R.is_reduced());
    CHECK(cyclic_reduce(R).conjugator.empty());
    for (int r = 1; r <= 2 * g; ++r) {
      int pos = 0, neg = 0;
      for (auto const& l : R.letters()) (l.j == r ? (l.sign > 0 ? pos : neg) : pos) += l.j == r;
      CHECK(pos == 1);
      CHECK(neg == 1);
    }
  }
  CHECK(format_word(surface_relator(2)) == "a1^-1 a2^-1 a3^-1 a4^-1 a1 a2 a3 a4");
}

TEST_CASE("dehn_reduce examples") {
  auto const s = GroupContext::pi1(2);
  CHECK(dehn_reduce(surface_relator(2)).empty());
  CHECK(dehn_reduce(W("a1", s)) == W("a1", s));
  CHECK(dehn_reduce(W("a1 a3 a1^-1 a3^-1", s)) == W("a1 a3 a1^-1 a3^-1", s));
  CHECK_THROWS_AS(dehn_reduce(W("a1", GroupContext::pi1(1))), ContextError);
  CHECK_THROWS_AS(dehn_reduce(W("a1.1", GroupContext::pi1(2, 2))), ContextError);
}

TEST_CASE("is_trivial_pi1 examples") {
  auto const t = GroupContext::pi1(1), s = GroupContext::pi1(2);
  CHECK(is_trivial_pi1(W("a1 a2 a1^-1 a2^-1", t)) == Verdict::Trivial);
  CHECK(is_trivial_pi1(W("a1 a2", t)) == Verdict::Nontrivial);
  Word const u = W("a2 a4^-1", s);
  CHECK(is_trivial_pi1(conjugate(surface_relator(2), u)) == Verdict::Trivial);
  CHECK(is_trivial_pi1(Word(s)) == Verdict::Trivial);
  // a1 a2 a3 a4 = a4 a3 a2 a1 in pi_1, so this is a conjugate of R
  CHECK(is_trivial_pi1(W("a1 a2 a3 a4 a1^-1 a2^-1 a3^-1 a4^-1", s)) == Verdict::Trivial);
  CHECK(is_trivial_pi1(W("a1 a2 a1^-1 a2^-1", s)) == Verdict::Nontrivial);
  // five letters of a rotated relator give way to the inverse of the other three
  CHECK(dehn_reduce(W("a3 a4 a1^-1 a2^-1 a3^-1 a1", s)) == W("a2^-1 a1^-1 a4 a1", s));
  // cyclic reduction alone shortens a conjugate
  CHECK(dehn_reduce(W("a3 a4 a1^-1 a2^-1 a3^-1", s)) == W("a4 a1^-1 a2^-1", s));
}

TEST_CASE("tuple_is_trivial examples") {
  auto id = Pi1Tuple::identity(3, 2);
  CHECK(tuple_is_trivial(id) == Verdict::Trivial);
  auto t = Pi1Tuple::identity(2, 2);
  t.components[0] = W("a1", GroupContext::pi1(2));
  CHECK(tuple_is_trivial(t) == Verdict::Nontrivial);
  CHECK(format_tuple(t) == "(a1, 1)");
}

TEST_CASE("split and join components are inverse") {
  std::mt19937_64 rng(testing::seed(20));
  for (int k = 0; k < 200; ++k) {
    int const n = 1 + rng() % 4, g = 1 + rng() % 3;
    Pi1Tuple t = Pi1Tuple::identity(n, g);
    for (auto& c : t.components) c = random_pi1(rng, g, rng() % 10);
    CHECK(split_components(join_components(t)) == t);
  }
}

TEST_CASE("property: normal-closure members are trivial (g = 2, 500 samples)") {
  std::mt19937_64 rng(testing::seed(21));
  auto const s = GroupContext::pi1(2);
  Word const R = surface_relator(2);
  for (int k = 0; k < 500; ++k) {
    Word w(s);
    int const factors = 1 + rng() % 3;
    for (int f = 0; f < factors; ++f) {
      Word const u = random_pi1(rng, 2, rng() % 4);
      w = concat(w, conjugate((rng() & 1) ? R : invert(R), u));
    }
    CAPTURE(format_word(w));
    CHECK(is_trivial_pi1(w) == Verdict::Trivial);
  }
}

TEST_CASE("property: rotations and interleavings of relators are trivial for g = 2, 3") {
  std::mt19937_64 rng(testing::seed(22));
  for (int g = 2; g <= 3; ++g) {
    Word const R = surface_relator(g);
    for (int k = 0; k < 200; ++k) {
      // insert a conjugate of R at a random position of a random word v: v1 (u R u^-1) v2 v2^-1 v1^-1
      Word const v1 = random_pi1(rng, g, rng() % 6), v2 = random_pi1(rng, g, rng() % 6);
      Word const u = random_pi1(rng, g, rng() % 4);
      Word const w = concat({v1, conjugate(R, u), v2, invert(v2), invert(v1)});
      CHECK(is_trivial_pi1(w) == Verdict::Trivial);
    }
  }
}

TEST_CASE("negative fixture: 28 generators and signed commutators (g = 2)") {
  auto const s = GroupContext::pi1(2);
  std::vector<Word> fixture;
  for (int r = 1; r <= 4; ++r) fixture.push_back(Word(s, {Letter::surf_a(1, r)}));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          fixture.push_back(commutator(Word(s, {Letter::surf_a(1, i, si)}), Word(s, {Letter::surf_a(1, j, sj)})));
  REQUIRE(fixture.size() == 28);
  std::mt19937_64 rng(testing::seed(23));
  std::vector<Representation> reps;
  for (int k = 0; k < 40; ++k) reps.push_back(random_representation(rng, 2, 7));
  for (auto const& w : fixture) {
    CAPTURE(format_word(w));
    CHECK(is_trivial_pi1(w) == Verdict::Nontrivial);
    CHECK(std::any_of(reps.begin(), reps.end(), [&](auto const& r) { return !r.kills(w); }));
  }
}

TEST_CASE("property: Dehn agrees with abelianization and finite quotients") {
  std::mt19937_64 rng(testing::seed(24));
  for (int g = 2; g <= 3; ++g) {
    std::vector<Representation> reps;
    for (int k = 0; k < 12; ++k) {
      reps.push_back(random_representation(rng, g, 6 + k % 3));
      REQUIRE(reps.back().kills(surface_relator(g)));
    }
    auto const R = surface_relator(g);
    for (int k = 0; k < 1500; ++k) {
      Word w = random_pi1(rng, g, rng() % 16);
      if (k % 3 == 0) w = concat(w, conjugate(R, random_pi1(rng, g, 3)));
      Verdict const v = is_trivial_pi1(w);
      Word const terminal = dehn_reduce(w);
      CHECK(terminal.size() <= cyclic_reduce(free_reduce(w)).core.size());
      if (v == Verdict::Trivial) {
        CHECK(abelian_trivial(w, g));
        for (auto const& r : reps) CHECK(r.kills(w));
      }
      if (!abelian_trivial(w, g)) CHECK(v == Verdict::Nontrivial);
      if (std::any_of(reps.begin(), reps.end(), [&](auto const& r) { return !r.kills(w); }))
        CHECK(v == Verdict::Nontrivial);
    }
  }
}

TEST_CASE("torus: verdict is exactly the exponent-sum test") {
  std::mt19937_64 rng(testing::seed(25));
  for (int k = 0; k < 1000; ++k) {
    Word const w = random_pi1(rng, 1, rng() % 12);
    CHECK((is_trivial_pi1(w) == Verdict::Trivial) == abelian_trivial(w, 1));
  }
}
