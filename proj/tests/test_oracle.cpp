#include "doctest.h"
#include "ipf/oracle.hpp"
#include "ipf/random.hpp"
#include "oracles.hpp"

using namespace ipf;

namespace {

NSeq n(std::vector<NSeq::Entry> e) { return NSeq::from_entries(std::move(e)); }
Perm const t01 = Perm::transposition(0, 1);

using Pairs = std::vector<std::pair<Point, Point>>;

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("truncation parameters") {
    Truncation t({4, 1, 4}, 5);
    CHECK(t.dim() == 2);
    CHECK(t.support()[0] == 1);
    CHECK(t.grid_size() == 25);
    CHECK_THROWS_AS(Truncation({}, 5), ArgumentError);
    CHECK_THROWS_AS(Truncation({0}, 1), ArgumentError);
    CHECK_THROWS_AS(Truncation({0, 1, 2, 3, 4, 5}, 64), ArgumentError);
  }

  TEST_CASE("truncate: identity on a one-point support") {
    GridMap m = truncate(identity(), Truncation({0}, 3));
    CHECK(m.pairs() == Pairs{{{1}, {1}}, {{2}, {2}}, {{3}, {3}}});
  }

  TEST_CASE("truncate: shift by one") {
    GridMap m = truncate(Element{Perm{}, n({{0, 2}}), n({{0, 3}})}, Truncation({0}, 4));
    CHECK(m.pairs() == Pairs{{{2}, {3}}, {{3}, {4}}});
  }

  TEST_CASE("truncate: swap") {
    GridMap m = truncate(from_unit(t01), Truncation({0, 1}, 2));
    CHECK(m.pairs() == Pairs{{{1, 1}, {1, 1}}, {{1, 2}, {2, 1}},
                             {{2, 1}, {1, 2}}, {{2, 2}, {2, 2}}});
  }

  TEST_CASE("truncate rejects a support that misses the element") {
    CHECK_THROWS_AS(truncate(from_unit(t01), Truncation({0}, 3)), ArgumentError);
    CHECK_THROWS_AS(truncate(idempotent(n({{2, 2}})), Truncation({0, 1}, 3)),
                    ArgumentError);
  }

  TEST_CASE("truncate: an idempotent is the identity on its up-set") {
    GridMap m = truncate(idempotent(n({{0, 2}, {1, 3}})), Truncation({0, 1}, 5));
    CHECK(m.size() == 4 * 3);
    for (auto const& [a, b] : m.pairs()) CHECK(a == b);
  }

  TEST_CASE("brute_compose examples") {
    Truncation t({0}, 6);
    GridMap up = truncate(Element{Perm{}, NSeq{}, n({{0, 2}})}, t);
    GridMap down = truncate(Element{Perm{}, n({{0, 2}}), NSeq{}}, t);
    // up then down is the identity where defined; down then up fixes >= 2.
    CHECK(brute_compose(up, down).size() == 5);
    for (auto const& [a, b] : brute_compose(up, down).pairs()) CHECK(a == b);
    CHECK(brute_compose(down, up) == truncate(idempotent(n({{0, 2}})), t));
    CHECK_THROWS_AS(brute_compose(up, truncate(identity(), Truncation({0}, 7))),
                    ArgumentError);
  }

  TEST_CASE("agree on fixed examples") {
    Truncation t({0, 1}, 10);
    Element a{t01, NSeq{}, n({{0, 2}})};
    Element b{Perm{}, n({{1, 2}}), NSeq{}};
    AgreeReport rep = agree_report(a, b, t);
    CHECK(rep.ok);
    CHECK(rep.interior >= 10);
    CHECK(agree(Element{Perm{}, n({{0, 2}}), n({{0, 3}})},
                Element{Perm{}, n({{0, 5}}), n({{0, 1}})}, Truncation({0}, 12)));
    CHECK_THROWS_AS(agree(a, b, Truncation({0}, 10)), ArgumentError);
  }

  TEST_CASE("GridMap validation") {
    CHECK_NOTHROW(GridMap::from_pairs(1, 4, {{{1}, {2}}, {{2}, {3}}}));
    // Decreasing.
    CHECK_THROWS_AS(GridMap::from_pairs(1, 4, {{{1}, {3}}, {{2}, {2}}}), ArgumentError);
    // Not injective.
    CHECK_THROWS_AS(GridMap::from_pairs(1, 4, {{{1}, {2}}, {{2}, {2}}}), ArgumentError);
    // Two images for one point.
    CHECK_THROWS_AS(GridMap::from_pairs(1, 4, {{{1}, {2}}, {{1}, {3}}}), ArgumentError);
    // Domain with a hole.
    CHECK_THROWS_AS(GridMap::from_pairs(1, 4, {{{1}, {1}}, {{3}, {2}}}), ArgumentError);
    // Image with a hole.
    CHECK_THROWS_AS(GridMap::from_pairs(1, 4, {{{1}, {1}}, {{2}, {3}}}), ArgumentError);
    // Off the grid.
    CHECK_THROWS_AS(GridMap::from_pairs(1, 4, {{{0}, {1}}}), ArgumentError);
    CHECK_THROWS_AS(GridMap::from_pairs(1, 4, {{{1}, {5}}}), ArgumentError);
    // Incomparable sources sent to comparable images: the inverse is not monotone.
    CHECK_THROWS_AS(GridMap::from_pairs(2, 3, {{{1, 2}, {1, 1}}, {{2, 1}, {1, 2}}}),
                    ArgumentError);
  }

  TEST_CASE("unit-step validation matches the pairwise reference on small maps") {
    // Every map from the square {1,2}^2 into a 3x3 grid. Anything the fast
    // check accepts must pass the pairwise reference.
    std::vector<Point> cells;
    for (Value i = 1; i <= 3; ++i)
      for (Value j = 1; j <= 3; ++j) cells.push_back({i, j});
    std::vector<Point> dom{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    std::size_t accepted = 0, pairwise = 0;
    for (auto const& p0 : cells)
      for (auto const& p1 : cells)
        for (auto const& p2 : cells)
          for (auto const& p3 : cells) {
            Pairs pairs{{dom[0], p0}, {dom[1], p1}, {dom[2], p2}, {dom[3], p3}};
            bool ok = true;
            try {
              GridMap::from_pairs(2, 3, pairs);
            } catch (ArgumentError const&) {
              ok = false;
            }
            bool ref = order_isomorphic_pairwise(pairs);
            if (ok) {
              CHECK(ref);
              ++accepted;
            }
            if (ref) ++pairwise;
          }
    // Order isomorphisms of the square onto a convex 2x2 block: four blocks,
    // two orientations each.
    CHECK(accepted == 8);
    CHECK(pairwise > accepted);
  }

  TEST_CASE("truncations are accepted by the pairwise reference") {
    for (std::uint64_t i = 0; i < 40; ++i) {
      Rng rng(mix_seed(9, "truncate-pairwise", i));
      GenParams p = GenParams::on({0, 2}, 4);
      Element a = random_element(rng, p);
      GridMap m = truncate(a, Truncation({0, 2}, 9));
      auto pairs = m.pairs();
      CAPTURE(a);
      CHECK(order_isomorphic_pairwise(pairs));
    }
  }

  TEST_CASE("recover_element reads back the element") {
    for (std::uint64_t i = 0; i < 40; ++i) {
      Rng rng(mix_seed(10, "recover", i));
      GenParams p = GenParams::on({0, 1, 3}, 4);
      Element a = random_element(rng, p);
      Truncation t({0, 1, 3}, 8);
      CAPTURE(a);
      CHECK(testing::recover_element(truncate(a, t), t) == a);
    }
  }

  TEST_CASE("element_support") {
    Element a{Perm::cycle({5, 7}), n({{2, 3}}), n({{7, 2}})};
    CHECK(element_support(a) == std::vector<Index>{2, 5, 7});
    CHECK(element_support(identity()).empty());
  }
}
