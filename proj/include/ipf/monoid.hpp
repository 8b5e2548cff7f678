// The inverse monoid of order isomorphisms between principal filters of
// sigma N^kappa.
//
// Every element is an order isomorphism ↑d -> ↑r of the form
//
//     a  |->  r + F_g(a - d),
//
// and the triple (g, d, r) determines it uniquely, so Element stores exactly
// that triple. Products with the semidirect product S ⋉ σB (pairs under the
// bicyclic-style multiplication) are provided through psi.

#pragma once

#include <compare>
#include <iosfwd>

#include "ipf/seq.hpp"

namespace ipf {

struct Element {
  Perm g;   // twist
  NSeq d;   // dom = ↑d
  NSeq r;   // ran = ↑r

  friend bool operator==(Element const&, Element const&) = default;
  friend auto operator<=>(Element const&, Element const&) = default;
};

// An element of sigma B^kappa.
struct BPair {
  NSeq p;
  NSeq q;

  friend bool operator==(BPair const&, BPair const&) = default;
  friend auto operator<=>(BPair const&, BPair const&) = default;
};

// An element of S ⋉ sigma B^kappa.
struct SdpElem {
  Perm g;
  BPair pair;

  friend bool operator==(SdpElem const&, SdpElem const&) = default;
  friend auto operator<=>(SdpElem const&, SdpElem const&) = default;
};

Element identity();
// The identity map of ↑d.
Element idempotent(NSeq d);
Element from_unit(Perm g);
// Member of the maximal subgroup at the idempotent of ↑d with twist g.
Element h_element(Perm g, NSeq d);

// Left-to-right composition: apply(compose(a, b), x) == apply(b, apply(a, x)).
Element compose(Element const& alpha, Element const& beta);
Element inverse(Element const& alpha);
bool is_idempotent(Element const& alpha);

// Throws DomainError when a is not above d.
NSeq apply(Element const& alpha, NSeq const& a);

BPair bpair_mul(BPair const& u, BPair const& v);
BPair bpair_act(Perm const& g, BPair const& u);
SdpElem sdp_mul(SdpElem const& s, SdpElem const& t);
SdpElem psi(Element const& alpha);

std::ostream& operator<<(std::ostream& os, Element const& a);
std::ostream& operator<<(std::ostream& os, BPair const& u);
std::ostream& operator<<(std::ostream& os, SdpElem const& s);

}  // namespace ipf
