#include "ipf/congruence.hpp"

#include <algorithm>

namespace ipf {

QuotElem canonical(Element const& alpha) {
  return QuotElem{alpha.g, diff(act_n(alpha.g, alpha.d), alpha.r)};
}

bool cmg_related(Element const& alpha, Element const& beta) {
  return canonical(alpha) == canonical(beta);
}

Element witness_idempotent(Element const& alpha, Element const& beta) {
  if (!cmg_related(alpha, beta)) {
    throw ArgumentError(
        "witness_idempotent: elements are not related by the least group "
        "congruence");
  }
  return idempotent(pointwise(alpha.r, beta.r, Extremum::max));
}

QuotElem quot_identity() { return QuotElem{}; }

QuotElem quot_mul(QuotElem const& s, QuotElem const& t) {
  return QuotElem{perm_compose(s.g, t.g), z_add(act_z(t.g, s.z), t.z)};
}

QuotElem quot_inv(QuotElem const& s) {
  Perm inv = perm_inverse(s.g);
  return QuotElem{inv, z_negate(act_z(inv, s.z))};
}

Element lift(QuotElem const& q) {
  // Split z = a - b with a, b >= 1 and disjoint non-trivial supports.
  std::vector<NSeq::Entry> pos, neg;
  for (auto const& [x, v] : q.z.entries()) {
    if (v > 0) {
      pos.emplace_back(x, detail::checked_add(v, 1));
    } else {
      neg.emplace_back(x, detail::checked_add(detail::checked_sub(0, v), 1));
    }
  }
  NSeq a = NSeq::from_sorted_unchecked(std::move(pos));
  NSeq b = NSeq::from_sorted_unchecked(std::move(neg));
  return Element{q.g, act_n(perm_inverse(q.g), a), std::move(b)};
}

Element top(Element const& alpha) {
  NSeq d = shifted_sub(
      alpha.d,
      pointwise(alpha.d, act_n(perm_inverse(alpha.g), alpha.r), Extremum::min));
  NSeq r = shifted_sub(
      alpha.r, pointwise(act_n(alpha.g, alpha.d), alpha.r, Extremum::min));
  return Element{alpha.g, std::move(d), std::move(r)};
}

Element collapse_witness(Element const& iota) {
  if (!is_idempotent(iota)) {
    throw ArgumentError("collapse_witness: argument must be an idempotent");
  }
  return Element{Perm{}, NSeq{}, iota.d};
}

Element power_idempotent(Element const& gamma, std::uint32_t n) {
  Element inv = inverse(gamma);
  Element left = identity();
  Element right = identity();
  for (std::uint32_t i = 0; i < n; ++i) {
    left = compose(left, inv);
    right = compose(right, gamma);
  }
  return compose(left, right);
}

}  // namespace ipf
