#include "ipf/monoid.hpp"

#include <cstdlib>
#include <iostream>

namespace ipf {

namespace {

// Inside compose the offsets are non-negative by construction; a failure
// here is a bug, not a user error.
NSeq offset_add_or_abort(NSeq const& a, ZSeq const& z) {
  try {
    return offset_add(a, z);
  } catch (Error const& e) {
    std::cerr << "ipf: internal invariant violated in compose: " << e.what()
              << '\n';
    std::abort();
  }
}

}  // namespace

Element identity() { return Element{}; }

Element idempotent(NSeq d) {
  NSeq r = d;
  return Element{Perm{}, std::move(d), std::move(r)};
}

Element from_unit(Perm g) { return Element{std::move(g), NSeq{}, NSeq{}}; }

Element h_element(Perm g, NSeq d) {
  NSeq r = d;
  return Element{std::move(g), std::move(d), std::move(r)};
}

Element compose(Element const& alpha, Element const& beta) {
  NSeq meet = pointwise(alpha.r, beta.d, Extremum::max);
  NSeq d = offset_add_or_abort(
      alpha.d, act_z(perm_inverse(alpha.g), diff(meet, alpha.r)));
  NSeq r = offset_add_or_abort(beta.r, act_z(beta.g, diff(meet, beta.d)));
  return Element{perm_compose(alpha.g, beta.g), std::move(d), std::move(r)};
}

Element inverse(Element const& alpha) {
  return Element{perm_inverse(alpha.g), alpha.r, alpha.d};
}

bool is_idempotent(Element const& alpha) {
  return alpha.g.is_identity() && alpha.d == alpha.r;
}

NSeq apply(Element const& alpha, NSeq const& a) {
  if (!seq_leq(alpha.d, a)) {
    throw DomainError("apply: point is not in the domain of the element");
  }
  return offset_add(alpha.r, act_z(alpha.g, diff(a, alpha.d)));
}

BPair bpair_mul(BPair const& u, BPair const& v) {
  NSeq m = pointwise(u.q, v.p, Extremum::max);
  return BPair{offset_add(u.p, diff(m, u.q)), offset_add(v.q, diff(m, v.p))};
}

BPair bpair_act(Perm const& g, BPair const& u) {
  return BPair{act_n(g, u.p), act_n(g, u.q)};
}

SdpElem sdp_mul(SdpElem const& s, SdpElem const& t) {
  return SdpElem{perm_compose(s.g, t.g),
                 bpair_mul(bpair_act(t.g, s.pair), t.pair)};
}

SdpElem psi(Element const& alpha) {
  return SdpElem{alpha.g, BPair{act_n(alpha.g, alpha.d), alpha.r}};
}

}  // namespace ipf
