// Canonical single-line JSON text forms.
//
//   NSeq / ZSeq  {"0":2,"3":7}          keys are decimal indices, ascending
//   Perm         [[0,1],[1,0]]          moved points only, ascending source
//   Element      {"g":Perm,"d":NSeq,"r":NSeq}
//   BPair        [NSeq,NSeq]
//   SdpElem      {"g":Perm,"pair":BPair}
//   QuotElem     {"g":Perm,"z":ZSeq}
//
// Rendering is byte-exact; parsing accepts any JSON whitespace and key order
// but rejects entries that violate the sparse invariants (value 1 in an
// NSeq, 0 in a ZSeq, fixed points or non-closed Perm) with a ParseError.

#pragma once

#include <string>
#include <string_view>

#include "ipf/congruence.hpp"
#include "ipf/monoid.hpp"
#include "ipf/seq.hpp"

namespace ipf {

std::string render(NSeq const& a);
std::string render(ZSeq const& z);
std::string render(Perm const& g);
std::string render(Element const& alpha);
std::string render(BPair const& u);
std::string render(SdpElem const& s);
std::string render(QuotElem const& q);

NSeq parse_nseq(std::string_view text);
ZSeq parse_zseq(std::string_view text);
Perm parse_perm(std::string_view text);
Element parse_element(std::string_view text);
QuotElem parse_quot(std::string_view text);

}  // namespace ipf
