// Seeded generators for property suites.
//
// All sampling goes through Rng::below, which uses rejection sampling on the
// raw mt19937_64 stream, so a given seed yields the same elements with every
// standard library.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "ipf/congruence.hpp"
#include "ipf/monoid.hpp"
#include "ipf/seq.hpp"

namespace ipf {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  // Uniform on [lo, hi].
  Value between(Value lo, Value hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Independent stream seed for (run seed, named stream, case number).
std::uint64_t mix_seed(std::uint64_t seed, std::string_view stream,
                       std::uint64_t index);

struct GenParams {
  // Candidate indices for supports and moved points.
  std::vector<Index> indices = {0, 1, 2, 3, 4, 5, 6, 7};
  // Sequence values are drawn from [1, max_value]; value 1 is not stored.
  Value max_value = 16;
  std::size_t max_moved = 6;

  static GenParams on(std::vector<Index> indices, Value max_value);
};

NSeq random_nseq(Rng& rng, GenParams const& p);
// Values in [-max_value, max_value].
ZSeq random_zseq(Rng& rng, GenParams const& p);
Perm random_perm(Rng& rng, GenParams const& p);
Element random_element(Rng& rng, GenParams const& p);
Element random_idempotent(Rng& rng, GenParams const& p);
QuotElem random_quot(Rng& rng, GenParams const& p);
// Uniformly sized subset of [0, limit) with at most max_size members, sorted.
std::vector<Index> random_subset(Rng& rng, Index limit, std::size_t max_size);

}  // namespace ipf
