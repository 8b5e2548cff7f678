#include "ipf/seq.hpp"

#include <string>
#include <unordered_set>

namespace ipf {

namespace detail {

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw RangeError("integer overflow in " + std::to_string(a) + " + " +
                     std::to_string(b));
  }
  return out;
}

Value checked_sub(Value a, Value b) {
  Value out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw RangeError("integer overflow in " + std::to_string(a) + " - " +
                     std::to_string(b));
  }
  return out;
}

namespace {

// Walks the union of two sorted supports and emits f(value_a, value_b) for
// every index in it. Indices outside both supports evaluate to
// f(fill_a, fill_b), which every caller guarantees equals the output fill.
template <class A, class B, class F>
std::vector<std::pair<Index, Value>> merge(A const& a, B const& b, F&& f) {
  auto ea = a.entries();
  auto eb = b.entries();
  std::vector<std::pair<Index, Value>> out;
  out.reserve(ea.size() + eb.size());
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      out.emplace_back(ea[i].first, f(ea[i].first, ea[i].second, B::fill));
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      out.emplace_back(eb[j].first, f(eb[j].first, A::fill, eb[j].second));
      ++j;
    } else {
      out.emplace_back(ea[i].first, f(ea[i].first, ea[i].second, eb[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class S>
S relabel(Perm const& g, S const& a) {
  std::vector<std::pair<Index, Value>> out(a.entries().begin(),
                                           a.entries().end());
  for (auto& e : out) e.first = g(e.first);
  std::sort(out.begin(), out.end());
  return S::from_sorted_unchecked(std::move(out));
}

}  // namespace
}  // namespace detail

template <class Traits>
Sequence<Traits> Sequence<Traits>::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!Traits::admissible(entries[i].second)) {
      throw InvalidValue(std::string(Traits::name) + ": value " +
                         std::to_string(entries[i].second) + " at index " +
                         std::to_string(entries[i].first) +
                         " is not admissible");
    }
    if (i > 0 && entries[i - 1].first == entries[i].first) {
      throw InvalidValue(std::string(Traits::name) + ": duplicate index " +
                         std::to_string(entries[i].first));
    }
  }
  return from_sorted_unchecked(std::move(entries));
}

template class Sequence<detail::NTraits>;
template class Sequence<detail::ZTraits>;

Perm Perm::from_pairs(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<Index> targets;
  targets.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [from, to] = pairs[i];
    if (from == to) {
      throw InvalidValue("Perm: fixed point " + std::to_string(from) +
                         " must not be stored");
    }
    if (i > 0 && pairs[i - 1].first == from) {
      throw InvalidValue("Perm: index " + std::to_string(from) +
                         " mapped twice");
    }
    targets.push_back(to);
  }
  std::sort(targets.begin(), targets.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (targets[i] != pairs[i].first) {
      // First position where the sorted key and value sets disagree.
      Index witness = std::min(targets[i], pairs[i].first);
      throw InvalidValue("Perm: value set differs from key set at index " +
                         std::to_string(witness));
    }
  }
  Perm p;
  p.moved_ = std::move(pairs);
  return p;
}

Perm Perm::transposition(Index x, Index y) {
  if (x == y) return Perm{};
  return from_pairs({{x, y}, {y, x}});
}

Perm Perm::cycle(std::vector<Index> const& points) {
  if (points.size() < 2) return Perm{};
  std::vector<Pair> pairs;
  pairs.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    pairs.emplace_back(points[i], points[(i + 1) % points.size()]);
  }
  return from_pairs(std::move(pairs));
}

NSeq atom(Index x, Value k) {
  if (k <= 0) {
    throw InvalidValue("atom: value " + std::to_string(k) +
                       " is not a positive integer");
  }
  return NSeq::from_sorted_unchecked({{x, k}});
}

NSeq constant_on(std::span<Index const> indices, Value n) {
  if (n <= 0) {
    throw InvalidValue("constant_on: value " + std::to_string(n) +
                       " is not a positive integer");
  }
  std::vector<NSeq::Entry> out;
  out.reserve(indices.size());
  for (Index x : indices) out.emplace_back(x, n);
  return NSeq::from_entries(std::move(out));
}

NSeq pointwise(NSeq const& a, NSeq const& b, Extremum op) {
  return NSeq::from_sorted_unchecked(
      detail::merge(a, b, [op](Index, Value x, Value y) {
        return op == Extremum::max ? std::max(x, y) : std::min(x, y);
      }));
}

NSeq shifted_add(NSeq const& a, NSeq const& b) {
  return NSeq::from_sorted_unchecked(
      detail::merge(a, b, [](Index, Value x, Value y) {
        return detail::checked_sub(detail::checked_add(x, y), 1);
      }));
}

NSeq shifted_sub(NSeq const& a, NSeq const& b) {
  return NSeq::from_sorted_unchecked(
      detail::merge(a, b, [](Index i, Value x, Value y) {
        if (y > x) {
          throw DomainError("shifted_sub: index " + std::to_string(i) + ": " +
                            std::to_string(x) + " < " + std::to_string(y));
        }
        return x - y + 1;
      }));
}

ZSeq diff(NSeq const& a, NSeq const& b) {
  return ZSeq::from_sorted_unchecked(detail::merge(
      a, b, [](Index, Value x, Value y) { return detail::checked_sub(x, y); }));
}

NSeq offset_add(NSeq const& a, ZSeq const& z) {
  return NSeq::from_sorted_unchecked(
      detail::merge(a, z, [](Index i, Value x, Value y) {
        Value v = detail::checked_add(x, y);
        if (v <= 0) {
          throw RangeError("offset_add: index " + std::to_string(i) +
                           " would be " + std::to_string(v));
        }
        return v;
      }));
}

bool seq_leq(NSeq const& a, NSeq const& b) {
  auto ea = a.entries();
  for (auto const& [x, v] : ea) {
    if (v > b[x]) return false;
  }
  // Indices stored only in b carry b >= 2 > 1 = a.
  return true;
}

NSeq project(NSeq const& a, Index x) {
  Value v = a[x];
  if (v == NSeq::fill) return NSeq{};
  return NSeq::from_sorted_unchecked({{x, v}});
}

ZSeq z_add(ZSeq const& a, ZSeq const& b) {
  return ZSeq::from_sorted_unchecked(detail::merge(
      a, b, [](Index, Value x, Value y) { return detail::checked_add(x, y); }));
}

ZSeq z_negate(ZSeq const& a) {
  std::vector<ZSeq::Entry> out(a.entries().begin(), a.entries().end());
  for (auto& e : out) e.second = detail::checked_sub(0, e.second);
  return ZSeq::from_sorted_unchecked(std::move(out));
}

Perm perm_compose(Perm const& g, Perm const& h) {
  std::vector<Index> keys;
  keys.reserve(g.moved_.size() + h.moved_.size());
  for (auto const& p : g.moved_) keys.push_back(p.first);
  for (auto const& p : h.moved_) keys.push_back(p.first);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  Perm out;
  for (Index x : keys) {
    Index y = h(g(x));
    if (y != x) out.moved_.emplace_back(x, y);
  }
  return out;
}

Perm perm_inverse(Perm const& g) {
  Perm out;
  out.moved_.reserve(g.moved_.size());
  for (auto const& [from, to] : g.moved_) out.moved_.emplace_back(to, from);
  std::sort(out.moved_.begin(), out.moved_.end());
  return out;
}

NSeq act_n(Perm const& g, NSeq const& a) { return detail::relabel(g, a); }

ZSeq act_z(Perm const& g, ZSeq const& z) { return detail::relabel(g, z); }

std::vector<Index> support(NSeq const& a) {
  std::vector<Index> out;
  out.reserve(a.support_size());
  for (auto const& e : a.entries()) out.push_back(e.first);
  return out;
}

std::vector<Index> support(Perm const& g) {
  std::vector<Index> out;
  out.reserve(g.moved().size());
  for (auto const& p : g.moved()) out.push_back(p.first);
  return out;
}

}  // namespace ipf
