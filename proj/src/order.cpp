#include "ipf/order.hpp"

namespace ipf {

namespace {

bool same_class(Element const& alpha, Element const& beta) {
  return alpha.g == beta.g &&
         diff(act_n(alpha.g, alpha.d), alpha.r) ==
             diff(act_n(beta.g, beta.d), beta.r);
}

}  // namespace

bool nat_leq(Element const& alpha, Element const& beta) {
  return same_class(alpha, beta) && seq_leq(beta.d, alpha.d);
}

bool nat_leq_by_range(Element const& alpha, Element const& beta) {
  return same_class(alpha, beta) && seq_leq(beta.r, alpha.r);
}

bool green(Green rel, Element const& alpha, Element const& beta) {
  switch (rel) {
    case Green::L:
      return alpha.d == beta.d;
    case Green::R:
      return alpha.r == beta.r;
    case Green::H:
      return alpha.d == beta.d && alpha.r == beta.r;
    case Green::D:
    case Green::J:
      return true;
  }
  return false;
}

Element d_witness(Element const& eps, Element const& iota) {
  if (!is_idempotent(eps) || !is_idempotent(iota)) {
    throw ArgumentError("d_witness: both arguments must be idempotents");
  }
  return Element{Perm{}, eps.d, iota.d};
}

}  // namespace ipf
