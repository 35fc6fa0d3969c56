#ifndef GORENSTEIN_SIMPLEX_HPP
#define GORENSTEIN_SIMPLEX_HPP

#include <cstdint>
#include <vector>

#include "gorenstein/exactla.hpp"

namespace gorenstein {

/// A full-dimensional lattice simplex in Z^d, stored as a (d+1) x d matrix
/// whose rows are the vertices. Vertex order is kept as given.
class LatticeSimplex {
 public:
  /// Throws DegenerateSimplex unless there are d+1 affinely independent
  /// points of Z^d with d >= 1.
  static LatticeSimplex from_vertices(const IntMatrix& vertices);
  static LatticeSimplex from_vertices(const std::vector<std::vector<std::int64_t>>& vertices);

  Eigen::Index dim() const { return vertices_.cols(); }
  const IntMatrix& vertices() const { return vertices_; }

  /// Rows (v_i, 1).
  IntMatrix homogenized() const;

  /// Normalized volume |det homogenized()|.
  BigInt volume() const;

 private:
  explicit LatticeSimplex(IntMatrix vertices) : vertices_(std::move(vertices)) {}

  IntMatrix vertices_;
};

/// conv(0, rows e_1, ..., e_{d-1}, (a_d - a_1, ..., a_d - a_{d-1}, a_d)).
LatticeSimplex family_A(const std::vector<std::int64_t>& a);

/// conv(0, rows of the block matrix built from B (length s) and C (length d),
/// 1 <= s < d): identity rows except row s = (b_s - b_1, ..., b_s - b_{s-1},
/// b_s, 0, ...) and row d = (c_d - c_1, ..., c_d - c_{d-1}, c_d).
LatticeSimplex family_BC(const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c);

/// conv(s x {0}, (0, ..., 0, 1)).
LatticeSimplex pyramid(const LatticeSimplex& s);

/// |nS cap Z^d| by a coordinate-by-coordinate scan inside the bounding box
/// of nS. Given x_1..x_{j-1}, the range of x_j is cut by the facets of the
/// projection of nS onto the first j coordinates, so the scan never enters
/// an empty slice. All arithmetic is integral.
std::uint64_t count_points(const LatticeSimplex& s, std::int64_t n);

/// Same, but gives up with BudgetExceeded after visiting `node_budget`
/// nodes of the scan.
std::uint64_t count_points(const LatticeSimplex& s, std::int64_t n, std::uint64_t node_budget);

}  // namespace gorenstein

#endif  // GORENSTEIN_SIMPLEX_HPP
