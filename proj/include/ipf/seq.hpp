// Finitely supported sequences over an unbounded index set and finitary
// permutations of that index set.
//
// The infinite cardinal is modelled by the non-negative 64-bit integers.
// Every sequence stores only the indices where it differs from its fill
// value, sorted by index, so structural equality is mathematical equality.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ipf/error.hpp"

namespace ipf {

using Index = std::uint64_t;
using Value = std::int64_t;

namespace detail {

Value checked_add(Value a, Value b);
Value checked_sub(Value a, Value b);

struct NTraits {
  static constexpr Value fill = 1;
  static constexpr bool admissible(Value v) noexcept { return v >= 1; }
  static constexpr char const* name = "NSeq";
};

struct ZTraits {
  static constexpr Value fill = 0;
  static constexpr bool admissible(Value) noexcept { return true; }
  static constexpr char const* name = "ZSeq";
};

}  // namespace detail

template <class Traits>
class Sequence {
 public:
  using Entry = std::pair<Index, Value>;
  static constexpr Value fill = Traits::fill;

  // The constant sequence (1 for NSeq, 0 for ZSeq).
  Sequence() = default;

  // Builds a sequence from arbitrary (index, value) pairs. Pairs carrying the
  // fill value are dropped; duplicate indices and inadmissible values throw
  // InvalidValue.
  static Sequence from_entries(std::vector<Entry> entries);

  // For kernels that already produce sorted, duplicate-free, admissible data.
  // Fill-valued entries are still removed.
  static Sequence from_sorted_unchecked(std::vector<Entry> entries) {
    std::erase_if(entries, [](Entry const& e) { return e.second == fill; });
    Sequence s;
    s.entries_ = std::move(entries);
    return s;
  }

  Value operator[](Index x) const noexcept {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), x,
        [](Entry const& e, Index key) { return e.first < key; });
    return (it != entries_.end() && it->first == x) ? it->second : fill;
  }

  std::span<Entry const> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_constant() const noexcept { return entries_.empty(); }

  // Largest stored value, or the fill value for the constant sequence.
  Value max_value() const noexcept {
    Value m = fill;
    for (auto const& e : entries_) m = std::max(m, e.second);
    return m;
  }

  friend bool operator==(Sequence const&, Sequence const&) = default;
  friend auto operator<=>(Sequence const&, Sequence const&) = default;

 private:
  std::vector<Entry> entries_;
};

// sigma N^kappa: positive integer sequences equal to 1 almost everywhere.
using NSeq = Sequence<detail::NTraits>;
// sigma Z^kappa: integer sequences equal to 0 almost everywhere.
using ZSeq = Sequence<detail::ZTraits>;

// Finitary bijection of the index set. Stores the moved indices only.
class Perm {
 public:
  using Pair = std::pair<Index, Index>;

  Perm() = default;

  // Throws InvalidValue on duplicate sources, stored fixed points, or a
  // target set that differs from the source set.
  static Perm from_pairs(std::vector<Pair> pairs);
  static Perm transposition(Index x, Index y);
  // (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0.
  static Perm cycle(std::vector<Index> const& points);

  Index operator()(Index x) const noexcept {
    auto it = std::lower_bound(
        moved_.begin(), moved_.end(), x,
        [](Pair const& p, Index key) { return p.first < key; });
    return (it != moved_.end() && it->first == x) ? it->second : x;
  }

  std::span<Pair const> moved() const noexcept { return moved_; }
  bool is_identity() const noexcept { return moved_.empty(); }

  friend bool operator==(Perm const&, Perm const&) = default;
  friend auto operator<=>(Perm const&, Perm const&) = default;

 private:
  friend Perm perm_compose(Perm const&, Perm const&);
  friend Perm perm_inverse(Perm const&);
  std::vector<Pair> moved_;
};

enum class Extremum { max, min };

// k_x: value k at x and 1 elsewhere. Throws InvalidValue for k <= 0.
NSeq atom(Index x, Value k);
// (n)_A: value n on every index of A and 1 elsewhere.
NSeq constant_on(std::span<Index const> indices, Value n);

NSeq pointwise(NSeq const& a, NSeq const& b, Extremum op);
// a + b - 1
NSeq shifted_add(NSeq const& a, NSeq const& b);
// a - b + 1; throws DomainError naming an index where b > a.
NSeq shifted_sub(NSeq const& a, NSeq const& b);
// a - b
ZSeq diff(NSeq const& a, NSeq const& b);
// a + z; throws RangeError naming an index where a + z <= 0.
NSeq offset_add(NSeq const& a, ZSeq const& z);
bool seq_leq(NSeq const& a, NSeq const& b);
// pi_x: keeps the value at x, resets everything else to 1.
NSeq project(NSeq const& a, Index x);

ZSeq z_add(ZSeq const& a, ZSeq const& b);
ZSeq z_negate(ZSeq const& a);

// x -> h(g(x)): g is applied first.
Perm perm_compose(Perm const& g, Perm const& h);
Perm perm_inverse(Perm const& g);

// F_g: the entry stored at x moves to g(x).
NSeq act_n(Perm const& g, NSeq const& a);
ZSeq act_z(Perm const& g, ZSeq const& z);

// Sorted union of the stored indices.
std::vector<Index> support(NSeq const& a);
std::vector<Index> support(Perm const& g);

std::ostream& operator<<(std::ostream& os, NSeq const& a);
std::ostream& operator<<(std::ostream& os, ZSeq const& z);
std::ostream& operator<<(std::ostream& os, Perm const& g);

}  // namespace ipf
