#include "doctest.h"
#include "ipf/order.hpp"
#include "ipf/random.hpp"

using namespace ipf;

namespace {

NSeq n(std::vector<NSeq::Entry> e) { return NSeq::from_entries(std::move(e)); }
Perm const t01 = Perm::transposition(0, 1);

}  // namespace

TEST_SUITE("order") {
  TEST_CASE("nat_leq examples") {
    Element a{t01, n({{0, 2}}), n({{1, 3}})};
    CHECK(nat_leq(a, a));
    CHECK(nat_leq(idempotent(n({{0, 2}})), identity()));
    Element lo{Perm{}, n({{0, 3}}), n({{0, 4}})};
    Element hi{Perm{}, n({{0, 2}}), n({{0, 3}})};
    // The right-hand idempotent restricts the range, the left-hand one the domain.
    CHECK(compose(hi, idempotent(lo.d)) == hi);
    CHECK(lo == compose(hi, idempotent(lo.r)));
    CHECK(lo == compose(idempotent(lo.d), hi));
    CHECK(nat_leq(lo, hi));
    CHECK_FALSE(nat_leq(hi, lo));
  }

  TEST_CASE("nat_leq requires equal twists and displacement") {
    CHECK_FALSE(nat_leq(from_unit(t01), identity()));
    // d grows but the displacement changes: not comparable.
    CHECK_FALSE(nat_leq(Element{Perm{}, n({{0, 3}}), n({{0, 3}})},
                        Element{Perm{}, n({{0, 2}}), n({{0, 3}})}));
  }

  TEST_CASE("domain and range criteria agree") {
    for (std::uint64_t i = 0; i < 400; ++i) {
      Rng rng(mix_seed(2, "order-criteria", i));
      GenParams p;
      Element b = random_element(rng, p);
      Element a = rng.coin() ? compose(b, random_idempotent(rng, p))
                             : random_element(rng, p);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(nat_leq(a, b) == nat_leq_by_range(a, b));
      if (nat_leq(a, b)) {
        CHECK(a == compose(b, idempotent(a.r)));
        CHECK(a == compose(idempotent(a.d), b));
      }
    }
  }

  TEST_CASE("green") {
    Perm h = Perm::cycle({0, 1, 2});
    CHECK(green(Green::L, Element{t01, n({{0, 2}}), n({{0, 9}})},
                Element{h, n({{0, 2}}), n({{1, 3}})}));
    Element a{t01, n({{0, 2}}), n({{1, 3}})};
    CHECK(green(Green::H, a, inverse(a)) == (a.d == a.r));
    Element b{t01, n({{0, 4}}), n({{0, 4}})};
    CHECK(green(Green::H, b, inverse(b)));
    CHECK(green(Green::D, a, identity()));
    CHECK(green(Green::J, a, b));
    CHECK_FALSE(green(Green::R, a, b));
  }

  TEST_CASE("d_witness") {
    CHECK(d_witness(identity(), identity()) == identity());
    Element e = idempotent(n({{0, 2}})), i = idempotent(n({{1, 3}}));
    Element w = d_witness(e, i);
    CHECK(w == Element{Perm{}, n({{0, 2}}), n({{1, 3}})});
    CHECK(compose(w, inverse(w)) == e);
    CHECK(compose(inverse(w), w) == i);
    CHECK_THROWS_AS(d_witness(from_unit(t01), i), ArgumentError);
    CHECK_THROWS_AS(d_witness(e, Element{Perm{}, NSeq{}, n({{0, 2}})}), ArgumentError);
  }
}
