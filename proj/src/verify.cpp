#include "ipf/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#ifdef IPF_HAVE_OPENMP
#include <omp.h>
#endif

#include "ipf/codec.hpp"
#include "ipf/congruence.hpp"
#include "ipf/oracle.hpp"
#include "ipf/order.hpp"

namespace ipf {

namespace {

std::string quoted(std::string const& s) { return "'" + s + "'"; }

template <class... Args>
std::string cmd(std::string_view verb, Args const&... args) {
  std::string out = "ipf ";
  out += verb;
  ((out += " " + quoted(render(args))), ...);
  return out;
}

std::string green_cmd(char rel, Element const& a, Element const& b) {
  return std::string("ipf green ") + rel + " " + quoted(render(a)) + " " +
         quoted(render(b));
}

using Cmds = std::vector<std::string>;

GenParams const& default_params() {
  static GenParams const p;
  return p;
}

// ---------------------------------------------------------------- axioms

void inverse_laws(CaseContext& cx, Rng& rng, Value) {
  Element a = random_element(rng, default_params());
  Element inv = inverse(a);
  Element aa = compose(a, inv);
  Element ia = compose(inv, a);
  auto repro = [&] {
    return Cmds{cmd("inverse", a), cmd("compose", a, inv),
                cmd("compose", aa, a), cmd("compose", ia, inv)};
  };
  cx.check(compose(aa, a) == a, "a a^-1 a = a", repro);
  cx.check(compose(ia, inv) == inv, "a^-1 a a^-1 = a^-1", repro);
  cx.check(aa == idempotent(a.d), "a a^-1 = id on dom a", repro);
  cx.check(ia == idempotent(a.r), "a^-1 a = id on ran a", repro);
  cx.check(inverse(inv) == a, "inverse is an involution", repro);
}

void associativity(CaseContext& cx, Rng& rng, Value) {
  Element a = random_element(rng, default_params());
  Element b = random_element(rng, default_params());
  Element c = random_element(rng, default_params());
  Element ab = compose(a, b);
  Element bc = compose(b, c);
  cx.check(compose(ab, c) == compose(a, bc), "(ab)c = a(bc)", [&] {
    return Cmds{cmd("compose", a, b), cmd("compose", ab, c),
                cmd("compose", b, c), cmd("compose", a, bc)};
  });
}

void idempotents_commute(CaseContext& cx, Rng& rng, Value) {
  Element e = random_idempotent(rng, default_params());
  Element f = random_idempotent(rng, default_params());
  Element ef = compose(e, f);
  Element fe = compose(f, e);
  auto repro = [&] { return Cmds{cmd("compose", e, f), cmd("compose", f, e)}; };
  cx.check(ef == fe, "ef = fe", repro);
  cx.check(ef == idempotent(pointwise(e.d, f.d, Extremum::max)),
           "ef = id on max{d_e, d_f}", repro);
  cx.check(is_idempotent(ef), "ef is idempotent", repro);
}

void idempotent_iff_square(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Element a;
  switch (rng.below(3)) {
    case 0: a = random_idempotent(rng, p); break;
    case 1: a = h_element(random_perm(rng, p), random_nseq(rng, p)); break;
    default: a = random_element(rng, p); break;
  }
  cx.check(is_idempotent(a) == (compose(a, a) == a), "idempotent iff aa = a",
           [&] { return Cmds{cmd("compose", a, a)}; });
}

void twist_homomorphism(CaseContext& cx, Rng& rng, Value) {
  Element a = random_element(rng, default_params());
  Element b = random_element(rng, default_params());
  cx.check(compose(a, b).g == perm_compose(a.g, b.g), "g_ab = g_a g_b",
           [&] { return Cmds{cmd("compose", a, b)}; });
}

// rho, then F_g, then lambda: the factorised form of an element.
NSeq apply_by_factors(Element const& a, NSeq const& x) {
  return shifted_add(act_n(a.g, shifted_sub(x, a.d)), a.r);
}

void apply_coherence(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Element a = random_element(rng, p);
  Element b = random_element(rng, p);
  Element ab = compose(a, b);
  NSeq x = shifted_add(ab.d, random_nseq(rng, p));
  NSeq y = shifted_add(a.d, random_nseq(rng, p));
  cx.check(apply(ab, x) == apply(b, apply(a, x)), "(x)ab = ((x)a)b", [&] {
    return Cmds{cmd("compose", a, b), cmd("apply", ab, x), cmd("apply", a, x)};
  });
  NSeq ay = apply(a, y);
  cx.check(ay == apply_by_factors(a, y), "closed form = rho F lambda chain",
           [&] { return Cmds{cmd("apply", a, y)}; });
  cx.check(seq_leq(a.r, ay), "image lies above r",
           [&] { return Cmds{cmd("apply", a, y)}; });
  if (!a.d.is_constant()) {
    bool threw = false;
    try {
      apply(a, NSeq{});
    } catch (DomainError const&) {
      threw = true;
    }
    cx.check(threw, "apply rejects points outside the domain",
             [&] { return Cmds{cmd("apply", a, NSeq{})}; });
  }
}

void idempotent_products(CaseContext& cx, Rng& rng, Value) {
  Element a = random_element(rng, default_params());
  Element e = random_idempotent(rng, default_params());
  NSeq fd = act_n(a.g, a.d);
  NSeq m = pointwise(a.r, e.d, Extremum::max);
  SdpElem right{a.g, BPair{offset_add(fd, diff(m, a.r)), m}};
  NSeq fm = act_n(a.g, pointwise(e.d, a.d, Extremum::max));
  SdpElem left{a.g, BPair{fm, offset_add(a.r, diff(fm, fd))}};
  cx.check(psi(compose(a, e)) == right, "psi(a e) closed form",
           [&] { return Cmds{cmd("compose", a, e), cmd("psi", compose(a, e))}; });
  cx.check(psi(compose(e, a)) == left, "psi(e a) closed form",
           [&] { return Cmds{cmd("compose", e, a), cmd("psi", compose(e, a))}; });
}

// p^i q^j, stored as exponents.
struct Bicyclic {
  Value i, j;
};

Bicyclic bicyclic_product(Bicyclic x, Bicyclic y) {
  if (x.j > y.i) return {x.i, x.j - y.i + y.j};
  if (x.j == y.i) return {x.i, y.j};
  return {x.i - x.j + y.i, y.j};
}

void bicyclic_law(CaseContext& cx, Rng& rng, Value) {
  Value i = rng.between(1, 20), j = rng.between(1, 20);
  Value k = rng.between(1, 20), l = rng.between(1, 20);
  Element a{Perm{}, atom(0, i), atom(0, j)};
  Element b{Perm{}, atom(0, k), atom(0, l)};
  Bicyclic w = bicyclic_product({i - 1, j - 1}, {k - 1, l - 1});
  Element expect{Perm{}, atom(0, w.i + 1), atom(0, w.j + 1)};
  cx.check(compose(a, b) == expect, "single-coordinate bicyclic law",
           [&] { return Cmds{cmd("compose", a, b)}; });
}

void seq_actions(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Perm g = random_perm(rng, p);
  Perm h = random_perm(rng, p);
  NSeq a = random_nseq(rng, p);
  NSeq b = random_nseq(rng, p);
  NSeq c = random_nseq(rng, p);

  cx.check(act_n(perm_compose(g, h), a) == act_n(h, act_n(g, a)),
           "F_gh = F_g F_h");
  cx.check(act_n(perm_inverse(g), act_n(g, a)) == a, "F_g^-1 F_g = I");
  if (g != h) {
    bool separated = false;
    for (Index x : p.indices) {
      if (act_n(g, atom(x, 2)) != act_n(h, atom(x, 2))) separated = true;
    }
    cx.check(separated, "g != h separates F_g from F_h on some 2_x");
  }
  cx.check(diff(act_n(g, a), act_n(g, b)) == act_z(g, diff(a, b)),
           "F_g(a - b) = F_g a - F_g b");
  cx.check(act_n(g, pointwise(a, b, Extremum::max)) ==
               pointwise(act_n(g, a), act_n(g, b), Extremum::max),
           "F_g commutes with max");
  cx.check(act_n(g, pointwise(a, b, Extremum::min)) ==
               pointwise(act_n(g, a), act_n(g, b), Extremum::min),
           "F_g commutes with min");
  NSeq above = shifted_add(a, c);
  cx.check(seq_leq(a, b) == seq_leq(act_n(g, a), act_n(g, b)),
           "F_g reflects and preserves <=");
  cx.check(seq_leq(act_n(g, a), act_n(g, above)), "F_g preserves <=");
  cx.check(shifted_add(shifted_add(a, b), c) == shifted_add(a, shifted_add(b, c)),
           "shifted_add is associative");
  cx.check(shifted_add(a, b) == shifted_add(b, a), "shifted_add is commutative");
  cx.check(shifted_add(a, NSeq{}) == a, "1 is neutral for shifted_add");
  cx.check(shifted_sub(shifted_add(a, b), b) == a,
           "shifted_sub undoes shifted_add");

  // offset_add(a, b - c) agrees with a + b - c wherever that stays positive.
  std::set<Index> keys;
  for (auto const* s : {&a, &b, &c}) {
    for (auto const& e : s->entries()) keys.insert(e.first);
  }
  bool defined = true;
  std::vector<NSeq::Entry> expect;
  for (Index x : keys) {
    Value v = a[x] + b[x] - c[x];
    if (v <= 0) defined = false;
    expect.emplace_back(x, v);
  }
  if (defined) {
    cx.check(offset_add(a, diff(b, c)) ==
                 NSeq::from_sorted_unchecked(std::move(expect)),
             "offset_add(a, b - c) = a + b - c");
  } else {
    bool threw = false;
    try {
      offset_add(a, diff(b, c));
    } catch (RangeError const&) {
      threw = true;
    }
    cx.check(threw, "offset_add rejects non-positive results");
  }
}

// ------------------------------------------------------------------- psi

void psi_homomorphism(CaseContext& cx, Rng& rng, Value) {
  Element a = random_element(rng, default_params());
  Element b = random_element(rng, default_params());
  cx.check(psi(compose(a, b)) == sdp_mul(psi(a), psi(b)),
           "psi(ab) = psi(a) psi(b)", [&] {
             return Cmds{cmd("compose", a, b), cmd("psi", compose(a, b)),
                         cmd("psi", a), cmd("psi", b)};
           });
}

void psi_injective(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  // A batch seeded with near neighbours of one element, so collisions would
  // have a fair chance to show up.
  Element base = random_element(rng, p);
  std::vector<Element> batch{base};
  batch.push_back(Element{base.g, base.r, base.d});
  batch.push_back(Element{perm_inverse(base.g), base.d, base.r});
  batch.push_back(Element{base.g, act_n(base.g, base.d), base.r});
  batch.push_back(Element{base.g, act_n(perm_inverse(base.g), base.d), base.r});
  for (int i = 0; i < 3; ++i) batch.push_back(random_element(rng, p));

  for (std::size_t i = 0; i < batch.size(); ++i) {
    SdpElem si = psi(batch[i]);
    Element back{si.g, act_n(perm_inverse(si.g), si.pair.p), si.pair.q};
    cx.check(back == batch[i], "psi is invertible",
             [&] { return Cmds{cmd("psi", batch[i])}; });
    for (std::size_t j = i + 1; j < batch.size(); ++j) {
      if (batch[i] == batch[j]) continue;
      cx.check(si != psi(batch[j]), "psi separates distinct elements", [&] {
        return Cmds{cmd("psi", batch[i]), cmd("psi", batch[j])};
      });
    }
  }
}

void bpair_automorphism(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Perm g = random_perm(rng, p);
  Perm h = random_perm(rng, p);
  BPair u{random_nseq(rng, p), random_nseq(rng, p)};
  BPair v{random_nseq(rng, p), random_nseq(rng, p)};
  BPair w{random_nseq(rng, p), random_nseq(rng, p)};
  cx.check(bpair_act(g, bpair_mul(u, v)) ==
               bpair_mul(bpair_act(g, u), bpair_act(g, v)),
           "Phi_g is a homomorphism");
  cx.check(bpair_act(perm_compose(g, h), u) == bpair_act(h, bpair_act(g, u)),
           "Phi_gh = Phi_g Phi_h");
  cx.check(bpair_mul(bpair_mul(u, v), w) == bpair_mul(u, bpair_mul(v, w)),
           "*_kappa is associative");
  cx.check(bpair_mul(BPair{}, u) == u && bpair_mul(u, BPair{}) == u,
           "(1,1) is neutral");
  SdpElem s{g, u}, t{h, v}, q{random_perm(rng, p), w};
  cx.check(sdp_mul(sdp_mul(s, t), q) == sdp_mul(s, sdp_mul(t, q)),
           "semidirect product is associative");
}

// ---------------------------------------------------------------- oracle

struct OracleCase {
  std::vector<Index> support;
  GenParams params;
};

OracleCase oracle_case(Rng& rng, Value bound) {
  std::vector<Index> s;
  while (s.empty()) s = random_subset(rng, 8, 3);
  GenParams params = GenParams::on(s, oracle_max_value(bound));
  return OracleCase{std::move(s), std::move(params)};
}

Value largest_coordinate(std::initializer_list<NSeq const*> seqs) {
  Value m = 1;
  for (auto const* s : seqs) m = std::max(m, s->max_value());
  return m;
}

void oracle_agree(CaseContext& cx, Rng& rng, Value bound) {
  OracleCase oc = oracle_case(rng, bound);
  Element a = random_element(rng, oc.params);
  Element b = random_element(rng, oc.params);
  Element ab = compose(a, b);
  NSeq meet = pointwise(a.r, b.d, Extremum::max);
  Value box = std::max(
      bound, largest_coordinate({&a.d, &a.r, &b.d, &b.r, &ab.d, &ab.r, &meet}) + 9);
  AgreeReport rep = agree_report(a, b, Truncation(oc.support, box));
  auto repro = [&] { return Cmds{cmd("compose", a, b)}; };
  cx.check(rep.ok, "brute-force composite agrees with compose", repro);
  cx.check(rep.interior >= 10, "at least 10 interior points", repro);
}

void oracle_idempotent(CaseContext& cx, Rng& rng, Value bound) {
  OracleCase oc = oracle_case(rng, bound);
  Element e = random_idempotent(rng, oc.params);
  Value box = std::max(bound, e.d.max_value() + 9);
  Truncation t(oc.support, box);
  GridMap m = truncate(e, t);
  std::uint64_t expect = 1;
  for (Index x : oc.support) expect *= static_cast<std::uint64_t>(box - e.d[x] + 1);
  bool identity_map = m.size() == expect;
  for (auto const& [x, y] : m.pairs()) identity_map = identity_map && x == y;
  cx.check(identity_map, "idempotent truncates to the identity of its domain",
           [&] { return Cmds{cmd("inverse", e)}; });
}

void oracle_associative(CaseContext& cx, Rng& rng, Value bound) {
  OracleCase oc = oracle_case(rng, bound);
  Element a = random_element(rng, oc.params);
  Element b = random_element(rng, oc.params);
  Element c = random_element(rng, oc.params);
  Value box = std::max(bound, largest_coordinate({&a.d, &a.r, &b.d, &b.r, &c.d, &c.r}) + 9);
  Truncation t(oc.support, box);
  GridMap f = truncate(a, t), g = truncate(b, t), h = truncate(c, t);
  cx.check(brute_compose(brute_compose(f, g), h) == brute_compose(f, brute_compose(g, h)),
           "brute_compose is associative",
           [&] { return Cmds{cmd("compose", a, b), cmd("compose", b, c)}; });
}

// ------------------------------------------------------------ congruence

void canonical_homomorphism(CaseContext& cx, Rng& rng, Value) {
  Element a = random_element(rng, default_params());
  Element b = random_element(rng, default_params());
  cx.check(canonical(compose(a, b)) == quot_mul(canonical(a), canonical(b)),
           "canonical(ab) = canonical(a) canonical(b)", [&] {
             return Cmds{cmd("compose", a, b), cmd("canonical", compose(a, b)),
                         cmd("canonical", a), cmd("canonical", b)};
           });
}

void lift_section(CaseContext& cx, Rng& rng, Value) {
  QuotElem q = random_quot(rng, default_params());
  Element a = lift(q);
  cx.check(canonical(a) == q, "canonical(lift(q)) = q",
           [&] { return Cmds{cmd("lift", q), cmd("canonical", a)}; });
}

// A partner for a that is related to it about half the time.
Element maybe_related(Rng& rng, Element const& a) {
  auto const& p = default_params();
  switch (rng.below(4)) {
    case 0: return compose(a, random_idempotent(rng, p));
    case 1: return compose(random_idempotent(rng, p), top(a));
    case 2: return Element{a.g, random_nseq(rng, p), random_nseq(rng, p)};
    default: return random_element(rng, p);
  }
}

void cmg_witness(CaseContext& cx, Rng& rng, Value) {
  Element a = random_element(rng, default_params());
  Element b = maybe_related(rng, a);
  Element e = idempotent(pointwise(a.r, b.r, Extremum::max));
  bool related = cmg_related(a, b);
  auto repro = [&] {
    return Cmds{cmd("canonical", a), cmd("canonical", b), cmd("compose", a, e),
                cmd("compose", b, e)};
  };
  cx.check(related == (compose(a, e) == compose(b, e)),
           "related iff a e = b e for e = id on max{r_a, r_b}", repro);
  if (related) {
    cx.check(witness_idempotent(a, b) == e, "witness is id on max{r_a, r_b}",
             repro);
  } else {
    bool threw = false;
    try {
      witness_idempotent(a, b);
    } catch (ArgumentError const&) {
      threw = true;
    }
    cx.check(threw, "witness rejects unrelated pairs", repro);
  }
}

void quotient_group(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  QuotElem s = random_quot(rng, p), t = random_quot(rng, p), u = random_quot(rng, p);
  cx.check(quot_mul(quot_mul(s, t), u) == quot_mul(s, quot_mul(t, u)),
           "quotient product is associative");
  cx.check(quot_mul(quot_identity(), s) == s && quot_mul(s, quot_identity()) == s,
           "(id, 0) is neutral");
  cx.check(quot_mul(s, quot_inv(s)) == quot_identity() &&
               quot_mul(quot_inv(s), s) == quot_identity(),
           "quot_inv is a two-sided inverse");
}

void top_element(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Element a = random_element(rng, p);
  Element t = top(a);
  auto repro = [&] { return Cmds{cmd("top", a), cmd("leq", a, t)}; };
  cx.check(cmg_related(t, a), "top(a) is in the class of a", repro);
  cx.check(nat_leq(a, t), "a <= top(a)", repro);
  cx.check(top(t) == t, "top is idempotent", repro);
  for (int i = 0; i < 10; ++i) {
    Element e = random_idempotent(rng, p);
    Element mate = (i % 2 == 0) ? compose(t, e) : compose(e, t);
    auto mrepro = [&] {
      return Cmds{cmd("compose", t, e), cmd("leq", mate, t),
                  cmd("canonical", mate), cmd("canonical", a)};
    };
    cx.check(cmg_related(mate, a), "class-mate is related", mrepro);
    cx.check(nat_leq(mate, t), "class-mate lies below top", mrepro);
  }
}

void collapse_powers(CaseContext& cx, Rng& rng, Value) {
  std::vector<Index> set = random_subset(rng, 8, 8);
  auto n = static_cast<std::uint32_t>(rng.below(6));
  Element w = collapse_witness(idempotent(constant_on(set, 2)));
  Element got = power_idempotent(w, n);
  Element expect = idempotent(constant_on(set, static_cast<Value>(n) + 1));
  cx.check(got == expect, "(w^-1)^n w^n = id on (n+1)_A",
           [&] { return Cmds{cmd("inverse", w), cmd("compose", w, w)}; });

  Element iota = random_idempotent(rng, default_params());
  Element c = collapse_witness(iota);
  auto repro = [&] {
    return Cmds{cmd("compose", c, inverse(c)), cmd("compose", inverse(c), c)};
  };
  cx.check(compose(c, inverse(c)) == identity(), "c c^-1 = I", repro);
  cx.check(compose(inverse(c), c) == iota, "c^-1 c = iota", repro);
}

// ----------------------------------------------------------------- order

// b, and a that lies below b about half the time.
std::pair<Element, Element> order_pair(Rng& rng) {
  auto const& p = default_params();
  Element b = random_element(rng, p);
  Element a;
  switch (rng.below(3)) {
    case 0: a = compose(b, random_idempotent(rng, p)); break;
    case 1: a = compose(random_idempotent(rng, p), b); break;
    default: a = random_element(rng, p); break;
  }
  return {a, b};
}

void order_criteria(CaseContext& cx, Rng& rng, Value) {
  auto [a, b] = order_pair(rng);
  cx.check(nat_leq(a, b) == nat_leq_by_range(a, b),
           "domain criterion = range criterion",
           [&] { return Cmds{cmd("leq", a, b)}; });
}

void order_definition(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  auto [a, b] = order_pair(rng);
  // With left-to-right composition the right factor restricts the range and
  // the left factor restricts the domain.
  if (nat_leq(a, b)) {
    cx.check(a == compose(b, idempotent(a.r)), "a <= b implies a = b e, e = id on r_a",
             [&] { return Cmds{cmd("leq", a, b), cmd("compose", b, idempotent(a.r))}; });
    cx.check(a == compose(idempotent(a.d), b), "a <= b implies a = f b, f = id on d_a",
             [&] { return Cmds{cmd("leq", a, b), cmd("compose", idempotent(a.d), b)}; });
  }
  Element e = random_idempotent(rng, p);
  Element be = compose(b, e);
  Element eb = compose(e, b);
  cx.check(nat_leq(be, b), "b e <= b",
           [&] { return Cmds{cmd("leq", be, b)}; });
  cx.check(nat_leq(eb, b), "e b <= b",
           [&] { return Cmds{cmd("leq", eb, b)}; });
}

void order_partial(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Element b = random_element(rng, p);
  Element a = compose(b, random_idempotent(rng, p));
  Element c = compose(a, random_idempotent(rng, p));
  cx.check(nat_leq(b, b), "reflexive", [&] { return Cmds{cmd("leq", b, b)}; });
  if (nat_leq(b, a)) {
    cx.check(a == b, "antisymmetric",
             [&] { return Cmds{cmd("leq", a, b), cmd("leq", b, a)}; });
  }
  cx.check(nat_leq(c, b), "transitive",
           [&] { return Cmds{cmd("leq", c, a), cmd("leq", a, b), cmd("leq", c, b)}; });
  Element e = random_idempotent(rng, p);
  Element f = random_idempotent(rng, p);
  cx.check(nat_leq(e, f) == seq_leq(f.d, e.d), "on idempotents e <= f iff d_f <= d_e",
           [&] { return Cmds{cmd("leq", e, f)}; });
}

void green_relations(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Element a = random_element(rng, p);
  Element b = random_element(rng, p);
  switch (rng.below(4)) {
    case 0: b.d = a.d; break;
    case 1: b.r = a.r; break;
    case 2: b.d = a.d; b.r = a.r; break;
    default: break;
  }
  bool l = green(Green::L, a, b), r = green(Green::R, a, b),
       h = green(Green::H, a, b);
  auto repro = [&] {
    return Cmds{green_cmd('L', a, b), green_cmd('R', a, b), green_cmd('H', a, b)};
  };
  cx.check(h == (l && r), "H = L and R", repro);
  cx.check(green(Green::D, a, b) && green(Green::J, a, b), "one D-class and J-class",
           repro);
  cx.check(l == (compose(a, inverse(a)) == compose(b, inverse(b))),
           "L iff a a^-1 = b b^-1", repro);
  cx.check(r == (compose(inverse(a), a) == compose(inverse(b), b)),
           "R iff a^-1 a = b^-1 b", repro);

  Element e = random_idempotent(rng, p);
  Element i = random_idempotent(rng, p);
  Element w = d_witness(e, i);
  auto wrepro = [&] {
    return Cmds{cmd("compose", w, inverse(w)), cmd("compose", inverse(w), w)};
  };
  cx.check(compose(w, inverse(w)) == e, "w w^-1 = e", wrepro);
  cx.check(compose(inverse(w), w) == i, "w^-1 w = i", wrepro);
}

void e_unitary(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Element a;
  switch (rng.below(4)) {
    case 0: a = random_idempotent(rng, p); break;
    case 1: {
      NSeq d = random_nseq(rng, p);
      a = Element{Perm{}, d, shifted_add(d, random_nseq(rng, p))};
      break;
    }
    case 2: a = h_element(random_perm(rng, p), random_nseq(rng, p)); break;
    default: a = random_element(rng, p); break;
  }
  Element e = random_idempotent(rng, p);
  Element ae = compose(a, e);
  auto repro = [&] { return Cmds{cmd("compose", a, e)}; };
  if (is_idempotent(ae)) {
    cx.check(is_idempotent(a), "a e idempotent implies a idempotent", repro);
  }
  if (is_idempotent(a)) {
    cx.check(is_idempotent(ae), "products of idempotents are idempotent", repro);
  }
}

// ----------------------------------------------------------------- units

void unit_homomorphism(CaseContext& cx, Rng& rng, Value) {
  Perm g = random_perm(rng, default_params());
  Perm h = random_perm(rng, default_params());
  Element ug = from_unit(g), uh = from_unit(h);
  cx.check(compose(ug, uh) == from_unit(perm_compose(g, h)),
           "from_unit(g) from_unit(h) = from_unit(gh)",
           [&] { return Cmds{cmd("compose", ug, uh)}; });
  cx.check(inverse(ug) == from_unit(perm_inverse(g)) &&
               compose(ug, inverse(ug)) == identity(),
           "from_unit(g) is a unit", [&] { return Cmds{cmd("inverse", ug)}; });
}

void unit_atoms(CaseContext& cx, Rng& rng, Value) {
  Perm g = random_perm(rng, default_params());
  Element u = from_unit(g);
  cx.check(apply(u, NSeq{}) == NSeq{}, "units fix 1",
           [&] { return Cmds{cmd("apply", u, NSeq{})}; });
  for (Index x = 0; x < 8; ++x) {
    for (Value k = 2; k <= 9; ++k) {
      cx.check(apply(u, atom(x, k)) == atom(g(x), k), "units map k_x to k_g(x)",
               [&] { return Cmds{cmd("apply", u, atom(x, k))}; });
    }
  }
}

void h_class_law(CaseContext& cx, Rng& rng, Value) {
  auto const& p = default_params();
  Perm g = random_perm(rng, p);
  Perm h = random_perm(rng, p);
  NSeq d = random_nseq(rng, p);
  Element x = h_element(g, d), y = h_element(h, d);
  cx.check(compose(x, y) == h_element(perm_compose(g, h), d),
           "H-class of id on d multiplies like S",
           [&] { return Cmds{cmd("compose", x, y)}; });
  cx.check(green(Green::H, x, idempotent(d)), "h_element lies in the H-class",
           [&] { return Cmds{green_cmd('H', x, idempotent(d))}; });
}

constexpr std::array kProperties{
    Property{"inverse_laws", Suite::axioms, inverse_laws},
    Property{"associativity", Suite::axioms, associativity},
    Property{"idempotents_commute", Suite::axioms, idempotents_commute},
    Property{"idempotent_iff_square", Suite::axioms, idempotent_iff_square},
    Property{"twist_homomorphism", Suite::axioms, twist_homomorphism},
    Property{"apply_coherence", Suite::axioms, apply_coherence},
    Property{"idempotent_products", Suite::axioms, idempotent_products},
    Property{"bicyclic_law", Suite::axioms, bicyclic_law},
    Property{"seq_actions", Suite::axioms, seq_actions},
    Property{"psi_homomorphism", Suite::psi, psi_homomorphism},
    Property{"psi_injective", Suite::psi, psi_injective},
    Property{"bpair_automorphism", Suite::psi, bpair_automorphism},
    Property{"oracle_agree", Suite::oracle, oracle_agree},
    Property{"oracle_idempotent", Suite::oracle, oracle_idempotent},
    Property{"oracle_associative", Suite::oracle, oracle_associative},
    Property{"canonical_homomorphism", Suite::congruence, canonical_homomorphism},
    Property{"lift_section", Suite::congruence, lift_section},
    Property{"cmg_witness", Suite::congruence, cmg_witness},
    Property{"quotient_group", Suite::congruence, quotient_group},
    Property{"top_element", Suite::congruence, top_element},
    Property{"collapse_powers", Suite::congruence, collapse_powers},
    Property{"order_criteria", Suite::order, order_criteria},
    Property{"order_definition", Suite::order, order_definition},
    Property{"order_partial", Suite::order, order_partial},
    Property{"green_relations", Suite::order, green_relations},
    Property{"e_unitary", Suite::order, e_unitary},
    Property{"unit_homomorphism", Suite::units, unit_homomorphism},
    Property{"unit_atoms", Suite::units, unit_atoms},
    Property{"h_class_law", Suite::units, h_class_law},
};

constexpr std::array kSuites{Suite::axioms, Suite::psi,   Suite::oracle,
                             Suite::congruence, Suite::order, Suite::units};

struct CaseOutcome {
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::optional<Failure> first;
};

CaseOutcome run_case(Property const& prop, std::uint64_t index,
                     std::uint64_t seed, Value bound) {
  Rng rng(mix_seed(seed, prop.name, index));
  CaseContext cx;
  CaseOutcome out;
  try {
    prop.run(cx, rng, bound);
  } catch (std::exception const& e) {
    cx.check(false, std::string("unexpected exception: ") + e.what());
  }
  out.checks = cx.checks();
  out.failed = cx.failed();
  out.first = cx.first_failure();
  if (out.first) out.first->case_index = index;
  return out;
}

}  // namespace

Value oracle_max_value(Value bound) { return std::max<Value>(2, bound / 3); }

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::axioms: return "axioms";
    case Suite::psi: return "psi";
    case Suite::oracle: return "oracle";
    case Suite::congruence: return "congruence";
    case Suite::order: return "order";
    case Suite::units: return "units";
  }
  return "?";
}

std::optional<std::vector<Suite>> parse_suite(std::string_view name) {
  if (name == "all") return std::vector<Suite>(kSuites.begin(), kSuites.end());
  for (Suite s : kSuites) {
    if (suite_name(s) == name) return std::vector<Suite>{s};
  }
  return std::nullopt;
}

std::span<Property const> properties() { return kProperties; }

Property const* find_property(std::string_view name) {
  for (auto const& p : kProperties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

PropertyResult run_property(Property const& prop, std::uint64_t cases,
                            std::uint64_t seed, Value bound, Execution exec) {
  std::vector<CaseOutcome> outcomes(cases);
  if (exec == Execution::parallel) {
    auto const n = static_cast<std::int64_t>(cases);
#ifdef IPF_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      outcomes[static_cast<std::size_t>(i)] =
          run_case(prop, static_cast<std::uint64_t>(i), seed, bound);
    }
  } else {
    for (std::uint64_t i = 0; i < cases; ++i) {
      outcomes[i] = run_case(prop, i, seed, bound);
    }
  }

  PropertyResult res;
  res.name = prop.name;
  res.suite = prop.suite;
  res.cases = cases;
  for (auto& o : outcomes) {
    res.checks += o.checks;
    res.failed += o.failed;
    if (!res.first && o.first) res.first = std::move(o.first);
  }
  return res;
}

VerifyReport run_verify(VerifyOptions const& options) {
  VerifyReport report{options, {}};
  for (Suite s : options.suites) {
    for (auto const& p : kProperties) {
      if (p.suite != s) continue;
      report.results.push_back(
          run_property(p, options.cases, options.seed, options.bound, options.exec));
    }
  }
  return report;
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](PropertyResult const& r) { return r.failed == 0; });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  std::string suites;
  for (Suite s : options.suites) {
    if (!suites.empty()) suites += ',';
    suites += suite_name(s);
  }
  GenParams const& p = default_params();
  os << "ipf verify suites=" << suites << " cases=" << options.cases
     << " seed=" << options.seed << " bound=" << options.bound << '\n';
  os << "generator: indices=[0," << p.indices.size() << ") values=[1,"
     << p.max_value << "] perm_moved<=" << p.max_moved
     << " oracle_indices<=3 oracle_values=[1," << oracle_max_value(options.bound)
     << "] oracle_box=max(bound,max_coordinate+9)\n";

  for (Suite s : options.suites) {
    std::uint64_t checks = 0, failed = 0;
    for (auto const& r : results) {
      if (r.suite != s) continue;
      checks += r.checks;
      failed += r.failed;
      os << "  " << suite_name(s) << '.' << r.name << ": cases=" << r.cases
         << " checks=" << r.checks << " failed=" << r.failed << '\n';
      if (r.first) {
        os << "    first counterexample: case " << r.first->case_index
           << ", check \"" << r.first->check << "\"\n";
        for (auto const& c : r.first->commands) os << "      " << c << '\n';
      }
    }
    os << "suite " << suite_name(s) << ": checks=" << checks
       << " failed=" << failed << (failed == 0 ? " PASS" : " FAIL") << '\n';
  }
  os << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace ipf
