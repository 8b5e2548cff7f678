// Brute-force ground truth on finite boxes.
//
// An Element is realised as an explicit table of point -> point pairs on the
// grid [1, B]^k over a finite set of k indices, and products are computed by
// plain relational composition of those tables. Nothing here uses the
// composition formula, so comparing brute_compose against compose checks it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ipf/monoid.hpp"

namespace ipf {

class Truncation {
 public:
  // Throws ArgumentError on an empty support, bound < 2, or a grid with more
  // than 2^24 points.
  Truncation(std::vector<Index> support, Value bound);

  std::span<Index const> support() const noexcept { return support_; }
  std::size_t dim() const noexcept { return support_.size(); }
  Value bound() const noexcept { return bound_; }
  std::uint64_t grid_size() const noexcept { return grid_size_; }
  bool covers(std::span<Index const> indices) const;

 private:
  std::vector<Index> support_;  // sorted, unique
  Value bound_;
  std::uint64_t grid_size_;
};

// Coordinates over the truncation support, each in [1, B].
using Point = std::vector<Value>;

// A finite partial map between grid points. Construction rejects anything
// that is not an order isomorphism between order-convex subsets of the grid.
class GridMap {
 public:
  GridMap(std::size_t dim, Value bound) : dim_(dim), bound_(bound) {}

  // Throws ArgumentError when a point is off-grid or the map is not
  // injective, not order-convex, or not an order isomorphism.
  static GridMap from_pairs(std::size_t dim, Value bound,
                            std::vector<std::pair<Point, Point>> pairs);

  std::size_t dim() const noexcept { return dim_; }
  Value bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }

  std::optional<Point> at(Point const& a) const;
  // Pairs in lexicographic order of the source point.
  std::vector<std::pair<Point, Point>> pairs() const;

  friend bool operator==(GridMap const&, GridMap const&) = default;

 private:
  friend GridMap brute_compose(GridMap const&, GridMap const&);
  friend GridMap truncate(Element const&, Truncation const&);

  using Code = std::uint64_t;
  Code encode(Point const& p) const;
  Point decode(Code c) const;
  std::optional<Code> lookup(Code c) const;
  void validate() const;

  std::size_t dim_;
  Value bound_;
  std::vector<std::pair<Code, Code>> codes_;  // sorted by source
};

// Reference check, quadratic in the number of pairs: does a <= b hold
// exactly when f(a) <= f(b)? Also requires injectivity.
bool order_isomorphic_pairwise(
    std::span<std::pair<Point, Point> const> pairs);

// a |-> apply(alpha, a) for grid points a >= d with image inside the grid.
// Throws ArgumentError when the support misses an index alpha touches.
GridMap truncate(Element const& alpha, Truncation const& t);

// Pairs (a, h(f(a))) for every a with f(a) in dom h.
GridMap brute_compose(GridMap const& f, GridMap const& h);

struct AgreeReport {
  bool ok = true;
  // Points of the algebraic composite whose intermediate image stays in the
  // box; each must appear in the brute-force composite.
  std::size_t interior = 0;
  std::string detail;
};

AgreeReport agree_report(Element const& alpha, Element const& beta,
                         Truncation const& t);
bool agree(Element const& alpha, Element const& beta, Truncation const& t);

// Indices touched by alpha: moved points of g and the supports of d and r.
std::vector<Index> element_support(Element const& alpha);

}  // namespace ipf
