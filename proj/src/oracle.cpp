#include "ipf/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace ipf {

namespace {

constexpr std::uint64_t kMaxGridPoints = std::uint64_t{1} << 24;

std::uint64_t grid_points(std::size_t dim, Value bound) {
  if (bound < 2) {
    throw ArgumentError("truncation bound must be at least 2, got " +
                        std::to_string(bound));
  }
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= static_cast<std::uint64_t>(bound);
    if (n > kMaxGridPoints) {
      throw ArgumentError("truncation grid exceeds 2^24 points");
    }
  }
  return n;
}

NSeq to_nseq(std::span<Index const> support, Point const& p) {
  std::vector<NSeq::Entry> entries;
  entries.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) entries.emplace_back(support[i], p[i]);
  return NSeq::from_sorted_unchecked(std::move(entries));
}

// Coordinates of a over the support; nullopt if a is non-trivial elsewhere.
std::optional<Point> to_point(std::span<Index const> support, NSeq const& a) {
  Point p(support.size(), 1);
  for (auto const& [x, v] : a.entries()) {
    auto it = std::lower_bound(support.begin(), support.end(), x);
    if (it == support.end() || *it != x) return std::nullopt;
    p[static_cast<std::size_t>(it - support.begin())] = v;
  }
  return p;
}

bool in_box(Point const& p, Value bound) {
  return std::all_of(p.begin(), p.end(),
                     [bound](Value v) { return v >= 1 && v <= bound; });
}

bool point_leq(Point const& a, Point const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string show(Point const& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

// A set of grid cells is order-convex iff it equals the intersection of its
// up-closure and down-closure inside the grid.
bool order_convex(std::vector<std::uint64_t> const& cells, std::size_t dim,
                  Value bound, std::uint64_t n) {
  std::vector<std::uint64_t> stride(dim);
  std::uint64_t s = 1;
  for (std::size_t i = dim; i-- > 0;) {
    stride[i] = s;
    s *= static_cast<std::uint64_t>(bound);
  }
  auto const b = static_cast<std::uint64_t>(bound);
  std::vector<std::uint8_t> member(n, 0), up(n, 0), down(n, 0);
  for (auto c : cells) member[c] = 1;
  for (std::uint64_t c = 0; c < n; ++c) {
    std::uint8_t v = member[c];
    for (std::size_t i = 0; i < dim && !v; ++i) {
      if ((c / stride[i]) % b > 0) v = up[c - stride[i]];
    }
    up[c] = v;
  }
  for (std::uint64_t c = n; c-- > 0;) {
    std::uint8_t v = member[c];
    for (std::size_t i = 0; i < dim && !v; ++i) {
      if ((c / stride[i]) % b + 1 < b) v = down[c + stride[i]];
    }
    down[c] = v;
    if (up[c] && v && !member[c]) return false;
  }
  return true;
}

}  // namespace

Truncation::Truncation(std::vector<Index> support, Value bound)
    : support_(std::move(support)), bound_(bound) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  if (support_.empty()) {
    throw ArgumentError("truncation support must be non-empty");
  }
  grid_size_ = grid_points(support_.size(), bound_);
}

bool Truncation::covers(std::span<Index const> indices) const {
  return std::all_of(indices.begin(), indices.end(), [this](Index x) {
    return std::binary_search(support_.begin(), support_.end(), x);
  });
}

GridMap::Code GridMap::encode(Point const& p) const {
  Code c = 0;
  for (Value v : p) c = c * static_cast<Code>(bound_) + static_cast<Code>(v - 1);
  return c;
}

Point GridMap::decode(Code c) const {
  Point p(dim_);
  for (std::size_t i = dim_; i-- > 0;) {
    p[i] = static_cast<Value>(c % static_cast<Code>(bound_)) + 1;
    c /= static_cast<Code>(bound_);
  }
  return p;
}

std::optional<GridMap::Code> GridMap::lookup(Code c) const {
  auto it = std::lower_bound(
      codes_.begin(), codes_.end(), c,
      [](std::pair<Code, Code> const& e, Code key) { return e.first < key; });
  if (it == codes_.end() || it->first != c) return std::nullopt;
  return it->second;
}

std::optional<Point> GridMap::at(Point const& a) const {
  if (a.size() != dim_ || !in_box(a, bound_)) return std::nullopt;
  auto c = lookup(encode(a));
  if (!c) return std::nullopt;
  return decode(*c);
}

std::vector<std::pair<Point, Point>> GridMap::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(codes_.size());
  for (auto const& [a, b] : codes_) out.emplace_back(decode(a), decode(b));
  return out;
}

void GridMap::validate() const {
  std::uint64_t n = grid_points(dim_, bound_);

  std::vector<std::pair<Code, Code>> inverse;
  inverse.reserve(codes_.size());
  for (auto const& [a, b] : codes_) inverse.emplace_back(b, a);
  std::sort(inverse.begin(), inverse.end());
  for (std::size_t i = 1; i < inverse.size(); ++i) {
    if (inverse[i - 1].first == inverse[i].first) {
      throw ArgumentError("grid map is not injective: two points map to " +
                          show(decode(inverse[i].first)));
    }
  }

  std::vector<Code> sources, targets;
  sources.reserve(codes_.size());
  targets.reserve(codes_.size());
  for (auto const& [a, b] : codes_) sources.push_back(a);
  for (auto const& [b, a] : inverse) targets.push_back(b);
  if (!order_convex(sources, dim_, bound_, n)) {
    throw ArgumentError("grid map domain is not order-convex");
  }
  if (!order_convex(targets, dim_, bound_, n)) {
    throw ArgumentError("grid map image is not order-convex");
  }

  // On convex sets every comparable pair is joined by a chain of unit steps
  // inside the set, so checking unit steps in both directions suffices.
  auto check_steps = [this](std::vector<std::pair<Code, Code>> const& table,
                            char const* what) {
    for (auto const& [a, fa] : table) {
      Point pa = decode(a);
      Point pfa = decode(fa);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (pa[i] == bound_) continue;
        Point next = pa;
        ++next[i];
        Code nc = encode(next);
        auto it = std::lower_bound(
            table.begin(), table.end(), nc,
            [](std::pair<Code, Code> const& e, Code key) { return e.first < key; });
        if (it == table.end() || it->first != nc) continue;
        if (!point_leq(pfa, decode(it->second))) {
          throw ArgumentError(std::string("grid map ") + what +
                              " is not monotone between " + show(pa) +
                              " and " + show(next));
        }
      }
    }
  };
  check_steps(codes_, "");
  check_steps(inverse, "inverse");
}

GridMap GridMap::from_pairs(std::size_t dim, Value bound,
                            std::vector<std::pair<Point, Point>> pairs) {
  GridMap m(dim, bound);
  grid_points(dim, bound);
  m.codes_.reserve(pairs.size());
  for (auto const& [a, b] : pairs) {
    if (a.size() != dim || b.size() != dim || !in_box(a, bound) ||
        !in_box(b, bound)) {
      throw ArgumentError("grid map point " + show(a) + " -> " + show(b) +
                          " is off the grid");
    }
    m.codes_.emplace_back(m.encode(a), m.encode(b));
  }
  std::sort(m.codes_.begin(), m.codes_.end());
  for (std::size_t i = 1; i < m.codes_.size(); ++i) {
    if (m.codes_[i - 1].first == m.codes_[i].first) {
      throw ArgumentError("grid map assigns two images to " +
                          show(m.decode(m.codes_[i].first)));
    }
  }
  m.validate();
  return m;
}

bool order_isomorphic_pairwise(
    std::span<std::pair<Point, Point> const> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      auto const& [a, fa] = pairs[i];
      auto const& [b, fb] = pairs[j];
      if (fa == fb) return false;
      if (point_leq(a, b) != point_leq(fa, fb)) return false;
    }
  }
  return true;
}

std::vector<Index> element_support(Element const& alpha) {
  std::vector<Index> out = support(alpha.g);
  for (auto x : support(alpha.d)) out.push_back(x);
  for (auto x : support(alpha.r)) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GridMap truncate(Element const& alpha, Truncation const& t) {
  if (!t.covers(element_support(alpha))) {
    throw ArgumentError("truncate: support does not cover the element");
  }
  auto sup = t.support();
  GridMap m(t.dim(), t.bound());

  Point lo(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) lo[i] = alpha.d[sup[i]];
  if (in_box(lo, t.bound())) {
    // Odometer over the box above d, lexicographic in the support order.
    Point p = lo;
    while (true) {
      auto image = to_point(sup, apply(alpha, to_nseq(sup, p)));
      if (!image) {
        throw ArgumentError("truncate: image leaves the truncation support");
      }
      if (in_box(*image, t.bound())) {
        m.codes_.emplace_back(m.encode(p), m.encode(*image));
      }
      bool done = true;
      for (std::size_t i = t.dim(); i-- > 0;) {
        if (p[i] < t.bound()) {
          ++p[i];
          done = false;
          break;
        }
        p[i] = lo[i];
      }
      if (done) break;
    }
  }
  m.validate();
  return m;
}

GridMap brute_compose(GridMap const& f, GridMap const& h) {
  if (f.dim_ != h.dim_ || f.bound_ != h.bound_) {
    throw ArgumentError("brute_compose: grid maps live on different grids");
  }
  GridMap out(f.dim_, f.bound_);
  for (auto const& [a, fa] : f.codes_) {
    if (auto hfa = h.lookup(fa)) out.codes_.emplace_back(a, *hfa);
  }
  out.validate();
  return out;
}

AgreeReport agree_report(Element const& alpha, Element const& beta,
                         Truncation const& t) {
  Element product = compose(alpha, beta);
  if (!t.covers(element_support(alpha)) || !t.covers(element_support(beta)) ||
      !t.covers(element_support(product))) {
    throw ArgumentError("agree: truncation support is too small");
  }
  GridMap f = truncate(alpha, t);
  GridMap h = truncate(beta, t);
  GridMap algebraic = truncate(product, t);
  GridMap brute = brute_compose(f, h);

  AgreeReport rep;
  auto fail = [&rep](std::string msg) {
    if (rep.ok) rep.detail = std::move(msg);
    rep.ok = false;
  };

  for (auto const& [a, fa] : brute.pairs()) {
    auto alg = algebraic.at(a);
    if (!alg) {
      fail("brute-force composite defines " + show(a) +
           " but the algebraic composite does not");
    } else if (*alg != fa) {
      fail("images of " + show(a) + " differ: brute " + show(fa) +
           ", algebraic " + show(*alg));
    }
  }
  auto sup = t.support();
  for (auto const& [a, image] : algebraic.pairs()) {
    auto mid = to_point(sup, apply(alpha, to_nseq(sup, a)));
    if (!mid || !in_box(*mid, t.bound())) continue;
    ++rep.interior;
    if (!brute.at(a)) {
      fail("algebraic composite maps " + show(a) + " -> " + show(image) +
           " via an in-box point, but the brute-force composite misses it");
    }
  }
  return rep;
}

bool agree(Element const& alpha, Element const& beta, Truncation const& t) {
  return agree_report(alpha, beta, t).ok;
}

}  // namespace ipf
