// Natural partial order and Green's relations.

#pragma once

#include "ipf/monoid.hpp"

namespace ipf {

// alpha ≼ beta via equal twists, equal displacement F_g(d) - r, and
// d_beta <= d_alpha.
bool nat_leq(Element const& alpha, Element const& beta);
// The same order tested through r_beta <= r_alpha instead of the domains.
bool nat_leq_by_range(Element const& alpha, Element const& beta);

enum class Green { L, R, H, D, J };

// L compares domains, R ranges, H both. The monoid is bisimple, so D and J
// are universal.
bool green(Green rel, Element const& alpha, Element const& beta);

// Given idempotents eps and iota, returns a with a·a⁻¹ = eps and a⁻¹·a = iota.
// Throws ArgumentError if either input is not idempotent.
Element d_witness(Element const& eps, Element const& iota);

}  // namespace ipf
