#ifndef GORENSTEIN_EXACTLA_HPP
#define GORENSTEIN_EXACTLA_HPP

// Exact integer linear algebra over Eigen dense matrices.
//
// Everything here is templated on the scalar so the same code runs on
// machine integers (tests, oracles) and on arbitrary-precision integers
// (the library default). All routines are pure.

#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "gorenstein/error.hpp"

namespace gorenstein {

using BigInt = boost::multiprecision::mpz_int;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<BigInt>;

/// h = u * m with h lower triangular, positive diagonal, and every entry
/// left of the diagonal reduced into [0, diagonal).
template <typename Scalar>
struct HermiteForm {
  Matrix<Scalar> h;
  Matrix<Scalar> u;
};

/// s = u * m * v with s diagonal, positive, s(0,0) | s(1,1) | ...
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> s;
  Matrix<Scalar> u;
  Matrix<Scalar> v;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

/// Quotient rounded towards negative infinity.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Scalar>
void row_axpy(Matrix<Scalar>& m, Eigen::Index target, const Scalar& factor,
              Eigen::Index source) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Scalar delta = factor * m(source, c);
    m(target, c) -= delta;
  }
}

template <typename Scalar>
void col_axpy(Matrix<Scalar>& m, Eigen::Index target, const Scalar& factor,
              Eigen::Index source) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Scalar delta = factor * m(r, source);
    m(r, target) -= delta;
  }
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* op) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(ErrorKind::InvalidParams,
                std::string(op) + ": matrix must be square and non-empty");
  }
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m, "det");
  Matrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / prev;
      }
    }
    prev = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

/// Classical adjugate: m * adjugate(m) = det(m) * I.
template <typename Derived>
Matrix<typename Derived::Scalar> adjugate(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m, "adjugate");
  const Eigen::Index n = m.rows();
  Matrix<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  Matrix<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // cofactor of (i, j) lands at (j, i)
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Scalar cof = det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Scalar(-cof);
    }
  }
  return adj;
}

/// Lower-triangular Hermite normal form under unimodular row operations.
/// Pivots are chosen by minimal absolute value.
template <typename Derived>
HermiteForm<typename Derived::Scalar> hnf(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  using detail::floor_div;
  detail::require_square(m, "hnf");
  const Eigen::Index n = m.rows();
  Matrix<Scalar> h = m;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(n, n);

  for (Eigen::Index j = n - 1; j >= 0; --j) {
    for (;;) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = 0; r <= j; ++r) {
        if (h(r, j) == 0) continue;
        if (pivot < 0 || abs_value<Scalar>(h(r, j)) < abs_value<Scalar>(h(pivot, j)))
          pivot = r;
      }
      if (pivot < 0) throw Error(ErrorKind::SingularMatrix, "hnf: singular matrix");
      if (pivot != j) {
        h.row(pivot).swap(h.row(j));
        u.row(pivot).swap(u.row(j));
      }
      bool clean = true;
      for (Eigen::Index r = 0; r < j; ++r) {
        if (h(r, j) == 0) continue;
        Scalar q = floor_div<Scalar>(h(r, j), h(j, j));
        detail::row_axpy(h, r, q, j);
        detail::row_axpy(u, r, q, j);
        if (h(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(j, j) < 0) {
      h.row(j) *= Scalar(-1);
      u.row(j) *= Scalar(-1);
    }
  }

  // Row j is zero right of column j, so reducing (i, j) leaves columns > j alone.
  for (Eigen::Index i = 1; i < n; ++i) {
    for (Eigen::Index j = i - 1; j >= 0; --j) {
      Scalar q = floor_div<Scalar>(h(i, j), h(j, j));
      if (q == 0) continue;
      detail::row_axpy(h, i, q, j);
      detail::row_axpy(u, i, q, j);
    }
  }
  return {std::move(h), std::move(u)};
}

/// Smith normal form of a square nonsingular matrix. Pivots are chosen by
/// minimal absolute value over the remaining block.
template <typename Derived>
SmithForm<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  using detail::floor_div;
  detail::require_square(m, "snf");
  const Eigen::Index n = m.rows();
  Matrix<Scalar> s = m;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);

  for (Eigen::Index t = 0; t < n; ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < n; ++i) {
        for (Eigen::Index j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (pi < 0 || abs_value<Scalar>(s(i, j)) < abs_value<Scalar>(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) throw Error(ErrorKind::SingularMatrix, "snf: singular matrix");
      if (pi != t) {
        s.row(pi).swap(s.row(t));
        u.row(pi).swap(u.row(t));
      }
      if (pj != t) {
        s.col(pj).swap(s.col(t));
        v.col(pj).swap(v.col(t));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < n; ++i) {
        if (s(i, t) == 0) continue;
        Scalar q = floor_div<Scalar>(s(i, t), s(t, t));
        detail::row_axpy(s, i, q, t);
        detail::row_axpy(u, i, q, t);
        if (s(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Scalar q = floor_div<Scalar>(s(t, j), s(t, t));
        detail::col_axpy(s, j, q, t);
        detail::col_axpy(v, j, q, t);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pull an offending row into row t and go again
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < n && bad_row < 0; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          Scalar r = s(i, j) % s(t, t);
          if (r != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      detail::row_axpy(s, t, Scalar(-1), bad_row);
      detail::row_axpy(u, t, Scalar(-1), bad_row);
    }
    if (s(t, t) < 0) {
      s.row(t) *= Scalar(-1);
      u.row(t) *= Scalar(-1);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
  auto d = det(m);
  return d == 1 || d == -1;
}

}  // namespace gorenstein

#endif  // GORENSTEIN_EXACTLA_HPP
