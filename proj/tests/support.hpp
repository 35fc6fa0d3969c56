#ifndef GORENSTEIN_TESTS_SUPPORT_HPP
#define GORENSTEIN_TESTS_SUPPORT_HPP

#include "gorenstein/exactla.hpp"
#include "gorenstein/simplex.hpp"
#include "oracles.hpp"

namespace support {

inline gorenstein::IntMatrix to_matrix(const oracle::Rows& rows) {
  gorenstein::IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline oracle::Rows to_rows(const gorenstein::IntMatrix& m) {
  oracle::Rows rows(static_cast<std::size_t>(m.rows()), oracle::Row(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).convert_to<std::int64_t>();
  return rows;
}

inline gorenstein::LatticeSimplex simplex(const oracle::Rows& vertices) {
  return gorenstein::LatticeSimplex::from_vertices(vertices);
}

}  // namespace support

#endif  // GORENSTEIN_TESTS_SUPPORT_HPP
