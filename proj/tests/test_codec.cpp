#include "doctest.h"
#include "ipf/codec.hpp"
#include "ipf/random.hpp"

using namespace ipf;

namespace {

NSeq n(std::vector<NSeq::Entry> e) { return NSeq::from_entries(std::move(e)); }
ZSeq z(std::vector<ZSeq::Entry> e) { return ZSeq::from_entries(std::move(e)); }
Perm const t01 = Perm::transposition(0, 1);

}  // namespace

TEST_SUITE("codec") {
  TEST_CASE("render is compact with ascending numeric keys") {
    CHECK(render(NSeq{}) == "{}");
    CHECK(render(n({{10, 3}, {2, 5}})) == R"({"2":5,"10":3})");
    CHECK(render(z({{1, -4}})) == R"({"1":-4})");
    CHECK(render(Perm{}) == "[]");
    CHECK(render(t01) == "[[0,1],[1,0]]");
    CHECK(render(Element{t01, n({{0, 2}}), NSeq{}}) ==
          R"({"g":[[0,1],[1,0]],"d":{"0":2},"r":{}})");
    CHECK(render(BPair{n({{0, 2}}), NSeq{}}) == R"([{"0":2},{}])");
    CHECK(render(SdpElem{}) == R"({"g":[],"pair":[{},{}]})");
    CHECK(render(QuotElem{Perm{}, z({{3, -1}})}) == R"({"g":[],"z":{"3":-1}})");
  }

  TEST_CASE("parse accepts whitespace and any key order") {
    CHECK(parse_nseq(R"( { "3" : 2 , "0":7 } )") == n({{0, 7}, {3, 2}}));
    CHECK(parse_element(R"({"r":{"1":3},"d":{"0":2},"g":[[0,1],[1,0]]})") ==
          Element{t01, n({{0, 2}}), n({{1, 3}})});
    CHECK(parse_quot(R"({"g":[],"z":{"0":-2}})") == QuotElem{Perm{}, z({{0, -2}})});
    CHECK(parse_perm("[[2,5],[5,2]]") == Perm::transposition(2, 5));
  }

  TEST_CASE("parse rejects malformed or non-canonical input") {
    CHECK_THROWS_AS(parse_nseq(R"({"0":2)"), ParseError);
    CHECK_THROWS_AS(parse_nseq(R"({"0":1})"), ParseError);
    CHECK_THROWS_AS(parse_nseq(R"({"0":0})"), ParseError);
    CHECK_THROWS_AS(parse_nseq(R"({"0":-2})"), ParseError);
    CHECK_THROWS_AS(parse_nseq(R"({"x":2})"), ParseError);
    CHECK_THROWS_AS(parse_nseq(R"({"01":2})"), ParseError);
    CHECK_THROWS_AS(parse_nseq(R"({"0":2.5})"), ParseError);
    CHECK_THROWS_AS(parse_nseq("[]"), ParseError);
    CHECK_THROWS_AS(parse_zseq(R"({"0":0})"), ParseError);
    CHECK_THROWS_AS(parse_perm("[[0,0]]"), ParseError);
    CHECK_THROWS_AS(parse_perm("[[0,1],[1,2]]"), ParseError);
    CHECK_THROWS_AS(parse_perm("[[0,1,2]]"), ParseError);
    CHECK_THROWS_AS(parse_element(R"({"g":[],"d":{}})"), ParseError);
    CHECK_THROWS_AS(parse_element(R"({"g":[],"d":{},"r":{},"x":1})"), ParseError);
  }

  TEST_CASE("round trip on random values") {
    for (std::uint64_t i = 0; i < 300; ++i) {
      Rng rng(mix_seed(6, "codec-roundtrip", i));
      GenParams p;
      Element a = random_element(rng, p);
      QuotElem q = random_quot(rng, p);
      CHECK(parse_element(render(a)) == a);
      CHECK(parse_quot(render(q)) == q);
      CHECK(render(parse_element(render(a))) == render(a));
    }
  }
}
