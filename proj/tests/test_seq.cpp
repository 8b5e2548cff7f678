#include <limits>

#include "doctest.h"
#include "ipf/random.hpp"
#include "ipf/seq.hpp"

using namespace ipf;

namespace {

NSeq n(std::vector<NSeq::Entry> e) { return NSeq::from_entries(std::move(e)); }
ZSeq z(std::vector<ZSeq::Entry> e) { return ZSeq::from_entries(std::move(e)); }

}  // namespace

TEST_SUITE("seqcore") {
  TEST_CASE("sparse form is canonical") {
    CHECK(n({{3, 1}, {0, 2}}) == n({{0, 2}}));
    CHECK(n({{0, 1}}) == NSeq{});
    CHECK(n({{5, 2}, {1, 3}}).entries().front().first == 1);
    CHECK_THROWS_AS(n({{0, 0}}), InvalidValue);
    CHECK_THROWS_AS(n({{0, -3}}), InvalidValue);
    CHECK_THROWS_AS(n({{0, 2}, {0, 3}}), InvalidValue);
    CHECK(z({{2, 0}, {1, -4}}) == z({{1, -4}}));
    CHECK(n({{4, 9}})[4] == 9);
    CHECK(n({{4, 9}})[5] == 1);
    CHECK(ZSeq{}[7] == 0);
  }

  TEST_CASE("atom") {
    CHECK(atom(0, 2) == n({{0, 2}}));
    CHECK(atom(5, 1) == NSeq{});
    CHECK(atom(3, 7) == n({{3, 7}}));
    CHECK_THROWS_AS(atom(0, 0), InvalidValue);
    CHECK_THROWS_AS(atom(0, -1), InvalidValue);
  }

  TEST_CASE("pointwise") {
    CHECK(pointwise(n({{0, 2}}), n({{1, 2}}), Extremum::max) == n({{0, 2}, {1, 2}}));
    CHECK(pointwise(n({{0, 2}}), n({{0, 5}}), Extremum::max) == n({{0, 5}}));
    CHECK(pointwise(n({{0, 2}}), n({{1, 3}}), Extremum::min) == NSeq{});
  }

  TEST_CASE("shifted_add") {
    CHECK(shifted_add(n({{0, 2}}), n({{0, 3}})) == n({{0, 4}}));
    NSeq a = n({{2, 5}, {7, 3}});
    CHECK(shifted_add(a, NSeq{}) == a);
    CHECK(shifted_add(n({{0, 2}, {1, 3}}), n({{1, 2}})) == n({{0, 2}, {1, 4}}));
  }

  TEST_CASE("shifted_sub") {
    CHECK(shifted_sub(n({{0, 4}}), n({{0, 3}})) == n({{0, 2}}));
    NSeq a = n({{2, 5}, {7, 3}});
    CHECK(shifted_sub(a, a) == NSeq{});
    CHECK_THROWS_WITH_AS(shifted_sub(n({{0, 2}}), n({{1, 2}})),
                         doctest::Contains("index 1"), DomainError);
  }

  TEST_CASE("diff") {
    CHECK(diff(n({{0, 3}}), n({{1, 2}})) == z({{0, 2}, {1, -1}}));
    NSeq a = n({{2, 5}});
    CHECK(diff(a, a) == ZSeq{});
    CHECK(diff(n({{0, 2}}), n({{0, 3}})) == z({{0, -1}}));
  }

  TEST_CASE("offset_add") {
    CHECK(offset_add(n({{0, 2}}), z({{0, -1}})) == NSeq{});
    CHECK(offset_add(n({{1, 3}}), z({{0, 2}})) == n({{0, 3}, {1, 3}}));
    CHECK_THROWS_WITH_AS(offset_add(NSeq{}, z({{0, -1}})),
                         doctest::Contains("index 0"), RangeError);
  }

  TEST_CASE("seq_leq") {
    CHECK(seq_leq(NSeq{}, n({{0, 2}})));
    CHECK_FALSE(seq_leq(n({{0, 2}}), n({{1, 2}})));
    CHECK(seq_leq(n({{0, 2}}), n({{0, 2}, {1, 3}})));
    CHECK_FALSE(seq_leq(n({{0, 3}}), n({{0, 2}})));
  }

  TEST_CASE("project") {
    CHECK(project(n({{0, 2}, {1, 3}}), 0) == n({{0, 2}}));
    CHECK(project(n({{0, 2}}), 5) == NSeq{});
    CHECK(project(NSeq{}, 0) == NSeq{});
  }

  TEST_CASE("perm construction") {
    CHECK(Perm::transposition(0, 1)(0) == 1);
    CHECK(Perm::transposition(0, 1)(9) == 9);
    CHECK(Perm::transposition(4, 4).is_identity());
    CHECK_THROWS_AS(Perm::from_pairs({{0, 1}}), InvalidValue);
    CHECK_THROWS_AS(Perm::from_pairs({{0, 0}}), InvalidValue);
    CHECK_THROWS_AS(Perm::from_pairs({{0, 1}, {0, 2}, {1, 0}}), InvalidValue);
    CHECK_THROWS_AS(Perm::from_pairs({{0, 1}, {2, 0}}), InvalidValue);
    CHECK(Perm::cycle({0, 1, 2}) == Perm::from_pairs({{0, 1}, {1, 2}, {2, 0}}));
  }

  TEST_CASE("perm_compose applies the left factor first") {
    Perm t01 = Perm::transposition(0, 1);
    Perm t12 = Perm::transposition(1, 2);
    CHECK(perm_compose(t01, t01).is_identity());
    CHECK(perm_compose(t01, t12) == Perm::from_pairs({{0, 2}, {1, 0}, {2, 1}}));
    Perm g = Perm::cycle({3, 5, 9});
    CHECK(perm_compose(g, Perm{}) == g);
    CHECK(perm_compose(Perm{}, g) == g);
  }

  TEST_CASE("perm_inverse") {
    CHECK(perm_inverse(Perm::transposition(0, 1)) == Perm::transposition(0, 1));
    CHECK(perm_inverse(Perm::cycle({0, 1, 2})) ==
          Perm::from_pairs({{0, 2}, {1, 0}, {2, 1}}));
    CHECK(perm_inverse(Perm{}).is_identity());
  }

  TEST_CASE("act_n relocates entries from x to g(x)") {
    CHECK(act_n(Perm::transposition(0, 1), n({{0, 7}})) == n({{1, 7}}));
    CHECK(act_n(Perm::cycle({4, 6}), NSeq{}) == NSeq{});
    CHECK(act_n(Perm::cycle({0, 1, 2}), n({{0, 2}, {1, 3}})) == n({{1, 2}, {2, 3}}));
  }

  TEST_CASE("act_z") {
    CHECK(act_z(Perm::transposition(0, 1), z({{0, -1}})) == z({{1, -1}}));
    ZSeq v = z({{3, 4}, {8, -2}});
    CHECK(act_z(Perm{}, v) == v);
    CHECK(act_z(Perm::cycle({1, 2, 3}), ZSeq{}) == ZSeq{});
  }

  TEST_CASE("z arithmetic") {
    CHECK(z_add(z({{0, 2}}), z({{0, -2}, {1, 1}})) == z({{1, 1}}));
    CHECK(z_negate(z({{0, 2}, {3, -5}})) == z({{0, -2}, {3, 5}}));
  }

  TEST_CASE("overflow is reported, not wrapped") {
    Value big = std::numeric_limits<Value>::max();
    CHECK_THROWS_AS(shifted_add(n({{0, big}}), n({{0, 3}})), RangeError);
    CHECK_THROWS_AS(offset_add(n({{0, big}}), z({{0, 1}})), RangeError);
    CHECK_THROWS_AS(z_negate(z({{0, std::numeric_limits<Value>::min()}})),
                    RangeError);
  }

  TEST_CASE("value semantics: inputs are untouched") {
    NSeq a = n({{0, 2}, {4, 3}});
    NSeq b = n({{1, 5}});
    NSeq a0 = a, b0 = b;
    Perm g = Perm::cycle({0, 1, 4});
    Perm g0 = g;
    (void)shifted_add(a, b);
    (void)pointwise(a, b, Extremum::max);
    (void)act_n(g, a);
    (void)diff(a, b);
    (void)perm_inverse(g);
    CHECK(a == a0);
    CHECK(b == b0);
    CHECK(g == g0);
  }

  TEST_CASE("action and arithmetic laws on random samples") {
    GenParams p;
    for (std::uint64_t i = 0; i < 500; ++i) {
      Rng rng(mix_seed(11, "seq-laws", i));
      Perm g = random_perm(rng, p), h = random_perm(rng, p);
      NSeq a = random_nseq(rng, p), b = random_nseq(rng, p), c = random_nseq(rng, p);
      CAPTURE(g);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(act_n(perm_compose(g, h), a) == act_n(h, act_n(g, a)));
      CHECK(diff(act_n(g, a), act_n(g, b)) == act_z(g, diff(a, b)));
      CHECK(act_n(g, pointwise(a, b, Extremum::max)) ==
            pointwise(act_n(g, a), act_n(g, b), Extremum::max));
      CHECK(act_n(g, pointwise(a, b, Extremum::min)) ==
            pointwise(act_n(g, a), act_n(g, b), Extremum::min));
      CHECK(seq_leq(a, b) == seq_leq(act_n(g, a), act_n(g, b)));
      CHECK(shifted_add(a, b) == shifted_add(b, a));
      CHECK(shifted_add(shifted_add(a, b), c) == shifted_add(a, shifted_add(b, c)));
      CHECK(shifted_sub(shifted_add(a, b), b) == a);
      CHECK(perm_compose(g, perm_inverse(g)).is_identity());
      if (g != h) {
        bool separated = false;
        for (Index x = 0; x < 8; ++x) {
          separated = separated || act_n(g, atom(x, 2)) != act_n(h, atom(x, 2));
        }
        CHECK(separated);
      }
    }
  }
}
