#include <doctest.h>

#include "braidlab/presentation.hpp"
#include "support.hpp"

using namespace braidlab;
using testing::W;

namespace {

GroupContext const F2 = GroupContext::free(2);
GroupContext const F3 = GroupContext::free(3);

Word raw(GroupContext const& ctx, std::vector<Letter> ls) { return Word(ctx, std::move(ls)); }

}  // namespace

TEST_CASE("free_reduce examples") {
  auto x = [](int i, int s = 1) { return Letter::free_x(i, s); };
  CHECK(free_reduce(raw(F2, {x(1), x(1, -1), x(2)})) == raw(F2, {x(2)}));
  CHECK(free_reduce(Word(F2)).empty());
  CHECK(free_reduce(raw(F2, {x(1), x(2), x(2, -1), x(1)})) == raw(F2, {x(1), x(1)}));
  CHECK(free_reduce(raw(F2, {x(1), x(2), x(2, -1), x(1, -1)})).empty());
}

TEST_CASE("invert examples") {
  CHECK(invert(W("x1 x2", F2)) == W("x2^-1 x1^-1", F2));
  CHECK(invert(Word(F2)).empty());
  auto const b3 = GroupContext::braid(3, 0);
  CHECK(invert(W("s1 s2^2", b3)) == W("s2^-1 s2^-1 s1^-1", b3));
}

TEST_CASE("concat examples") {
  CHECK(concat(W("x1", F2), W("x1^-1", F2)).empty());
  auto const b3 = GroupContext::braid(3, 0);
  CHECK(concat(W("s1", b3), W("s2", b3)) == W("s1 s2", b3));
  auto const pb = GroupContext::pure(2, 1);
  CHECK(concat(W("a1.1", pb), Word(pb)) == W("a1.1", pb));
  CHECK_THROWS_AS(concat(W("x1", F2), W("x1", F3)), ContextError);
}

TEST_CASE("cyclic_reduce examples") {
  auto r = cyclic_reduce(W("x1 x2 x1^-1", F2));
  CHECK(r.core == W("x2", F2));
  CHECK(r.conjugator == W("x1", F2));
  r = cyclic_reduce(W("x1 x2", F2));
  CHECK(r.core == W("x1 x2", F2));
  CHECK(r.conjugator.empty());
  r = cyclic_reduce(W("x1^-1 x2 x2 x1", F2));
  CHECK(r.core == W("x2 x2", F2));
  CHECK(r.conjugator == W("x1^-1", F2));
}

TEST_CASE("substitute examples") {
  auto const b2 = GroupContext::braid(2, 0);
  auto any = [&](Letter const&) -> std::optional<Word> { return W("s1 s1", b2); };
  CHECK(substitute(Word(b2, {Letter::sigma(1), Letter::sigma(1, -1)}), b2, any).empty());

  Word const u = W("x1 x3", F3), v = W("x3^-1 x2", F3);
  auto table = [&](Letter const& l) -> std::optional<Word> { return l.i == 1 ? u : v; };
  CHECK(substitute(W("x1 x2", F2), F3, table) == W("x1 x2", F3));

  CHECK(expand_big_t(1, 3, GroupContext::pure(3, 0)) == W("s1 s2 s2 s1", GroupContext::braid(3, 0)));
}

TEST_CASE("missing image is reported") {
  auto none = [](Letter const&) -> std::optional<Word> { return std::nullopt; };
  CHECK_THROWS_AS(substitute(W("x1", F2), F2, none), MissingImage);
  CHECK(substitute(Word(F2), F2, none).empty());
}

TEST_CASE("letter ranges follow the context") {
  auto const b3 = GroupContext::braid(3, 2);
  CHECK(b3.admits(Letter::sigma(2)));
  CHECK_FALSE(b3.admits(Letter::sigma(3)));
  CHECK_FALSE(b3.admits(Letter::sigma(0)));
  CHECK(b3.admits(Letter::surf_a(1, 4)));
  CHECK_FALSE(b3.admits(Letter::surf_a(1, 5)));
  CHECK_FALSE(b3.admits(Letter::surf_a(2, 1)));  // only strand 1 in B_n(M)

  auto const pb = GroupContext::pure(3, 1);
  CHECK(pb.admits(Letter::surf_a(3, 2)));
  CHECK_FALSE(pb.admits(Letter::surf_a(4, 1)));
  CHECK(pb.admits(Letter::big_t(1, 3)));
  CHECK_FALSE(pb.admits(Letter::big_t(2, 2)));
  CHECK_FALSE(pb.admits(Letter::big_t(3, 1)));
  CHECK_FALSE(pb.admits(Letter::sigma(1)));
  CHECK(pb.admits(Letter::cap_a(2, 2)));
  CHECK_FALSE(pb.admits(Letter::cap_a(2, 3)));

  CHECK(F2.admits(Letter::free_x(2)));
  CHECK_FALSE(F2.admits(Letter::free_x(3)));
  CHECK_THROWS_AS(Word(F2, {Letter::free_x(3)}), ContextError);
  CHECK_THROWS_AS(Word(pb, {Letter::sigma(1)}), ContextError);
}

TEST_CASE("context invariants") {
  CHECK_THROWS_AS(GroupContext::braid(0, 1), ContextError);
  CHECK_THROWS_AS(GroupContext::pure(2, -1), ContextError);
  CHECK_THROWS_AS(GroupContext::pi1(0), ContextError);
  CHECK_NOTHROW(GroupContext::hat_pure(3, 0));
  CHECK(GroupContext::pure(3, 0).is_disk());
}

TEST_CASE("ambient generators per family") {
  auto count = [](GroupContext const& c, Gen k) {
    int m = 0;
    for (auto const& l : c.generators()) m += l.kind == k;
    return m;
  };
  auto const bn = GroupContext::braid(4, 2);
  CHECK(count(bn, Gen::Sigma) == 3);
  CHECK(count(bn, Gen::SurfA) == 4);
  CHECK(bn.generators().size() == 7);

  auto const pbn = GroupContext::pure(4, 2);
  CHECK(count(pbn, Gen::SurfA) == 16);
  CHECK(count(pbn, Gen::BigT) == 6);
  CHECK(count(pbn, Gen::SmallT) == 0);

  auto const hat = GroupContext::hat_pure(4, 2);
  CHECK(count(hat, Gen::SmallT) == 6);
  CHECK(count(hat, Gen::BigT) == 0);
  CHECK(hat.admits(Letter::big_t(1, 3)));
  CHECK_FALSE(hat.is_ambient(Letter::big_t(1, 3)));

  CHECK(count(GroupContext::hat_pure(4, 0), Gen::BigT) == 6);
}

TEST_CASE("power, commutator, exponent sums") {
  auto const x1 = W("x1", F2), x2 = W("x2", F2);
  CHECK(power(x1, 3) == W("x1 x1 x1", F2));
  CHECK(power(x1, -2) == W("x1^-1 x1^-1", F2));
  CHECK(power(x1, 0).empty());
  CHECK(commutator(x1, x2) == W("x1 x2 x1^-1 x2^-1", F2));
  CHECK(conjugate(x1, x2) == W("x2 x1 x2^-1", F2));
  CHECK(exponent_sum(W("x1 x2 x1 x2^-1 x2^-1", F2), Letter::free_x(1)) == 2);
  CHECK(exponent_sum(W("x1 x2 x1 x2^-1 x2^-1", F2), Letter::free_x(2)) == -1);
}

TEST_CASE("property: reduction agrees with the quadratic oracle and is idempotent") {
  std::mt19937_64 rng(testing::seed(1));
  for (auto const& ctx : {F3, GroupContext::braid(4, 1), GroupContext::pure(3, 2), GroupContext::hat_pure(3, 1)}) {
    for (int k = 0; k < 400; ++k) {
      Word const w = testing::raw_word(rng, ctx, static_cast<int>(rng() % 30));
      Word const r = free_reduce(w);
      REQUIRE(r == testing::naive_reduce(w));
      CHECK(r.is_reduced());
      CHECK(free_reduce(r) == r);
      CHECK(r.size() <= w.size());
    }
  }
}

TEST_CASE("property: group laws at the reduced-word level") {
  std::mt19937_64 rng(testing::seed(2));
  auto const ctx = GroupContext::pure(3, 1);
  for (int k = 0; k < 500; ++k) {
    Word const u = testing::raw_word(rng, ctx, static_cast<int>(rng() % 12));
    Word const v = testing::raw_word(rng, ctx, static_cast<int>(rng() % 12));
    Word const w = testing::raw_word(rng, ctx, static_cast<int>(rng() % 12));
    CHECK(concat(u, invert(u)).empty());
    CHECK(concat(invert(u), u).empty());
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    CHECK(invert(invert(free_reduce(u))) == free_reduce(u));
    CHECK(invert(concat(u, v)) == concat(invert(v), invert(u)));
  }
}

TEST_CASE("property: substitute is a homomorphism") {
  std::mt19937_64 rng(testing::seed(3));
  auto const target = GroupContext::free(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> images;
    for (int i = 0; i < 3; ++i) images.push_back(free_reduce(testing::raw_word(rng, target, 1 + rng() % 5)));
    auto table = [&](Letter const& l) -> std::optional<Word> { return images[l.i - 1]; };
    for (int k = 0; k < 20; ++k) {
      Word const u = testing::raw_word(rng, F3, static_cast<int>(rng() % 10));
      Word const v = testing::raw_word(rng, F3, static_cast<int>(rng() % 10));
      CHECK(substitute(concat(u, v), target, table) ==
            concat(substitute(u, target, table), substitute(v, target, table)));
      CHECK(substitute(invert(u), target, table) == invert(substitute(u, target, table)));
    }
  }
}

TEST_CASE("property: cyclic_reduce returns a conjugate decomposition") {
  std::mt19937_64 rng(testing::seed(4));
  for (int k = 0; k < 1000; ++k) {
    Word const w = free_reduce(testing::raw_word(rng, F2, static_cast<int>(rng() % 20)));
    auto const [core, u] = cyclic_reduce(w);
    CHECK(conjugate(core, u) == w);
    CHECK(core.is_reduced());
    if (core.size() >= 2) CHECK_FALSE(core[0].cancels(core[core.size() - 1]));
  }
}
