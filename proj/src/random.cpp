#include "ipf/random.hpp"

#include <algorithm>
#include <limits>

namespace ipf {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  // Largest multiple of n that fits, to avoid modulo bias.
  std::uint64_t const limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

Value Rng::between(Value lo, Value hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Value>(below(span));
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view stream,
                       std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : stream) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(seed ^ h) + index);
}

GenParams GenParams::on(std::vector<Index> indices, Value max_value) {
  GenParams p;
  p.max_moved = indices.size();
  p.indices = std::move(indices);
  p.max_value = max_value;
  return p;
}

NSeq random_nseq(Rng& rng, GenParams const& p) {
  std::vector<NSeq::Entry> entries;
  for (Index x : p.indices) {
    if (rng.coin()) entries.emplace_back(x, rng.between(1, p.max_value));
  }
  std::sort(entries.begin(), entries.end());
  return NSeq::from_sorted_unchecked(std::move(entries));
}

ZSeq random_zseq(Rng& rng, GenParams const& p) {
  std::vector<ZSeq::Entry> entries;
  for (Index x : p.indices) {
    if (rng.coin()) entries.emplace_back(x, rng.between(-p.max_value, p.max_value));
  }
  std::sort(entries.begin(), entries.end());
  return ZSeq::from_sorted_unchecked(std::move(entries));
}

Perm random_perm(Rng& rng, GenParams const& p) {
  std::size_t cap = std::min(p.max_moved, p.indices.size());
  std::size_t k = rng.below(cap + 1);
  std::vector<Index> pool = p.indices;
  shuffle(rng, pool);
  pool.resize(k);
  std::vector<Index> image = pool;
  shuffle(rng, image);
  std::vector<Perm::Pair> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    if (pool[i] != image[i]) pairs.emplace_back(pool[i], image[i]);
  }
  return Perm::from_pairs(std::move(pairs));
}

Element random_element(Rng& rng, GenParams const& p) {
  Perm g = random_perm(rng, p);
  NSeq d = random_nseq(rng, p);
  NSeq r = random_nseq(rng, p);
  return Element{std::move(g), std::move(d), std::move(r)};
}

Element random_idempotent(Rng& rng, GenParams const& p) {
  return idempotent(random_nseq(rng, p));
}

QuotElem random_quot(Rng& rng, GenParams const& p) {
  Perm g = random_perm(rng, p);
  return QuotElem{std::move(g), random_zseq(rng, p)};
}

std::vector<Index> random_subset(Rng& rng, Index limit, std::size_t max_size) {
  std::vector<Index> pool(limit);
  for (Index i = 0; i < limit; ++i) pool[i] = i;
  shuffle(rng, pool);
  pool.resize(rng.below(std::min<std::size_t>(max_size, limit) + 1));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace ipf
