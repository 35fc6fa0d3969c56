#include "gorenstein/simplex.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace gorenstein {

namespace {

std::int64_t to_int64(const BigInt& x, const char* what) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + ": value exceeds 64-bit range");
  return x.convert_to<std::int64_t>();
}

LatticeSimplex with_origin(const IntMatrix& rows) {
  IntMatrix v = IntMatrix::Zero(rows.rows() + 1, rows.cols());
  v.bottomRows(rows.rows()) = rows;
  return LatticeSimplex::from_vertices(v);
}

// Inequality a . (x_1, ..., x_j) >= n * c on a prefix of the coordinates.
struct Facet {
  std::vector<std::int64_t> a;
  std::int64_t c = 0;
  auto operator<=>(const Facet&) const = default;
};

// Facets of the projection of S onto its first j coordinates. The
// projection is the hull of the projected vertices, so every facet passes
// through j of them.
std::vector<Facet> projected_facets(const IntMatrix& vertices, Eigen::Index j) {
  const Eigen::Index m = vertices.rows();
  std::set<Facet> found;
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(j));
  for (Eigen::Index i = 0; i < j; ++i) pick[i] = i;
  for (;;) {
    std::vector<BigInt> normal(static_cast<std::size_t>(j));
    if (j == 1) {
      normal[0] = 1;
    } else {
      IntMatrix rows(j - 1, j);
      for (Eigen::Index r = 1; r < j; ++r)
        rows.row(r - 1) = vertices.row(pick[r]).head(j) - vertices.row(pick[0]).head(j);
      for (Eigen::Index col = 0; col < j; ++col) {
        IntMatrix minor(j - 1, j - 1);
        for (Eigen::Index r = 0, out = 0; r < j; ++r)
          if (r != col) minor.col(out++) = rows.col(r);
        normal[col] = (col % 2 == 0 ? 1 : -1) * det(minor);
      }
    }
    if (std::any_of(normal.begin(), normal.end(), [](const BigInt& x) { return x != 0; })) {
      auto value = [&](Eigen::Index i) {
        BigInt acc = 0;
        for (Eigen::Index col = 0; col < j; ++col) acc += normal[col] * vertices(i, col);
        return acc;
      };
      const BigInt base = value(pick[0]);
      bool above = false, below = false;
      for (Eigen::Index i = 0; i < m; ++i) {
        const BigInt diff = value(i) - base;
        above = above || diff > 0;
        below = below || diff < 0;
      }
      if (!(above && below)) {
        const int sign = below ? -1 : 1;
        BigInt g = abs(base);
        for (const auto& x : normal) g = gcd(g, BigInt(abs(x)));
        Facet f;
        for (const auto& x : normal) f.a.push_back(sign * to_int64(BigInt(x / g), "count_points"));
        f.c = sign * to_int64(BigInt(base / g), "count_points");
        found.insert(std::move(f));
      }
    }
    // next j-subset of the m vertices
    Eigen::Index i = j - 1;
    while (i >= 0 && pick[i] == m - j + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (Eigen::Index r = i + 1; r < j; ++r) pick[r] = pick[r - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Depth-first scan, one coordinate per level; the range of x_j is cut
// exactly by the facets of the projection onto the first j coordinates.
struct PointScan {
  std::int64_t n = 0;
  std::vector<std::vector<Facet>> levels;  // levels[j] for coordinate j
  std::uint64_t budget = 0;
  std::uint64_t visited = 0;
  std::uint64_t found = 0;
  std::vector<std::int64_t> x;

  void run(std::size_t j) {
    if (++visited > budget)
      throw Error(ErrorKind::BudgetExceeded, "count_points: node budget exhausted");
    std::int64_t lo = std::numeric_limits<std::int64_t>::min();
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& f : levels[j]) {
      const std::int64_t coef = f.a[j];
      if (coef == 0) continue;
      std::int64_t rest = n * f.c;
      for (std::size_t t = 0; t < j; ++t) rest -= f.a[t] * x[t];
      if (coef > 0)
        lo = std::max(lo, ceil_div(rest, coef));
      else
        hi = std::min(hi, floor_div(rest, coef));
    }
    if (lo > hi) return;
    if (j + 1 == levels.size()) {
      found += static_cast<std::uint64_t>(hi - lo + 1);
      return;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[j] = v;
      run(j + 1);
    }
  }
};

}  // namespace

LatticeSimplex LatticeSimplex::from_vertices(const IntMatrix& vertices) {
  const Eigen::Index d = vertices.cols();
  if (d < 1 || vertices.rows() != d + 1)
    throw Error(ErrorKind::DegenerateSimplex,
                "simplex in Z^" + std::to_string(d) + " needs " + std::to_string(d + 1) +
                    " vertices, got " + std::to_string(vertices.rows()));
  LatticeSimplex s(vertices);
  if (det(s.homogenized()) == 0)
    throw Error(ErrorKind::DegenerateSimplex, "vertices are affinely dependent");
  return s;
}

LatticeSimplex LatticeSimplex::from_vertices(const std::vector<std::vector<std::int64_t>>& vertices) {
  if (vertices.empty()) throw Error(ErrorKind::DegenerateSimplex, "no vertices");
  const std::size_t d = vertices.front().size();
  IntMatrix m(static_cast<Eigen::Index>(vertices.size()), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].size() != d)
      throw Error(ErrorKind::DegenerateSimplex, "vertices of different lengths");
    for (std::size_t j = 0; j < d; ++j) m(i, j) = vertices[i][j];
  }
  return from_vertices(m);
}

IntMatrix LatticeSimplex::homogenized() const {
  const Eigen::Index n = vertices_.rows();
  IntMatrix m(n, n);
  m.leftCols(n - 1) = vertices_;
  for (Eigen::Index i = 0; i < n; ++i) m(i, n - 1) = 1;
  return m;
}

BigInt LatticeSimplex::volume() const { return abs(det(homogenized())); }

LatticeSimplex family_A(const std::vector<std::int64_t>& a) {
  const auto d = static_cast<Eigen::Index>(a.size());
  if (d < 1 || a.back() == 0)
    throw Error(ErrorKind::DegenerateSimplex, "family_A: need d >= 1 and a_d != 0");
  IntMatrix rows = IntMatrix::Identity(d, d);
  for (Eigen::Index j = 0; j + 1 < d; ++j) rows(d - 1, j) = a.back() - a[j];
  rows(d - 1, d - 1) = a.back();
  return with_origin(rows);
}

LatticeSimplex family_BC(const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c) {
  const auto s = static_cast<Eigen::Index>(b.size());
  const auto d = static_cast<Eigen::Index>(c.size());
  if (s < 1 || s >= d)
    throw Error(ErrorKind::DegenerateSimplex, "family_BC: need 1 <= |B| < |C|");
  if (b.back() == 0 || c.back() == 0)
    throw Error(ErrorKind::DegenerateSimplex, "family_BC: need b_s != 0 and c_d != 0");
  IntMatrix rows = IntMatrix::Identity(d, d);
  for (Eigen::Index j = 0; j + 1 < s; ++j) rows(s - 1, j) = b.back() - b[j];
  rows(s - 1, s - 1) = b.back();
  for (Eigen::Index j = 0; j + 1 < d; ++j) rows(d - 1, j) = c.back() - c[j];
  rows(d - 1, d - 1) = c.back();
  return with_origin(rows);
}

LatticeSimplex pyramid(const LatticeSimplex& s) {
  const Eigen::Index d = s.dim();
  IntMatrix v = IntMatrix::Zero(d + 2, d + 1);
  v.topLeftCorner(d + 1, d) = s.vertices();
  v(d + 1, d) = 1;
  return LatticeSimplex::from_vertices(v);
}

std::uint64_t count_points(const LatticeSimplex& s, std::int64_t n) {
  return count_points(s, n, std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t count_points(const LatticeSimplex& s, std::int64_t n, std::uint64_t node_budget) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "count_points: negative dilation");
  if (n == 0) return 1;
  const Eigen::Index d = s.dim();
  PointScan scan;
  scan.n = n;
  scan.budget = node_budget;
  scan.x.assign(static_cast<std::size_t>(d), 0);
  for (Eigen::Index j = 1; j <= d; ++j) scan.levels.push_back(projected_facets(s.vertices(), j));
  scan.run(0);
  return scan.found;
}

}  // namespace gorenstein
