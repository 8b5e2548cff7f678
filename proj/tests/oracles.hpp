// Test-only ground truth that does not go through the composition formula.

#pragma once

#include <optional>
#include <vector>

#include "ipf/oracle.hpp"

namespace ipf::testing {

// Reads (g, d, r) back off a brute-force table: d is the least source point,
// r its image, and g is read from the images of the unit steps d + e_i.
// Returns nullopt if the table has no least point or a step is missing.
std::optional<Element> recover_element(GridMap const& m, Truncation const& t);

// The product a·b computed only from truncations and relational composition.
std::optional<Element> brute_product(Element const& a, Element const& b,
                                     std::vector<Index> support, Value bound);

// rho_a, then F_g, then lambda_a.
NSeq apply_by_factors(Element const& a, NSeq const& x);

}  // namespace ipf::testing
