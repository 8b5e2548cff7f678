// The least group congruence, its quotient group S ⋉ sigma Z^kappa, top
// elements of congruence classes, and the idempotent-collapsing witnesses.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

#include "ipf/monoid.hpp"

namespace ipf {

// An element (g, z) of S ⋉ sigma Z^kappa.
struct QuotElem {
  Perm g;
  ZSeq z;

  friend bool operator==(QuotElem const&, QuotElem const&) = default;
  friend auto operator<=>(QuotElem const&, QuotElem const&) = default;
};

// (g, F_g(d) - r): the image of alpha in the maximal group quotient.
QuotElem canonical(Element const& alpha);
bool cmg_related(Element const& alpha, Element const& beta);

// An idempotent e with alpha·e == beta·e, namely the identity of
// ↑max{r_alpha, r_beta}. Throws ArgumentError if the inputs are unrelated.
Element witness_idempotent(Element const& alpha, Element const& beta);

QuotElem quot_identity();
QuotElem quot_mul(QuotElem const& s, QuotElem const& t);
QuotElem quot_inv(QuotElem const& s);

// A preimage of q under canonical.
Element lift(QuotElem const& q);

// The greatest element of alpha's congruence class.
Element top(Element const& alpha);

// (id, 1, d_iota): maps all of sigma N^kappa onto dom iota.
Element collapse_witness(Element const& iota);

// (gamma⁻¹)^n · gamma^n by repeated composition.
Element power_idempotent(Element const& gamma, std::uint32_t n);

std::ostream& operator<<(std::ostream& os, QuotElem const& q);

}  // namespace ipf
