#pragma once

#include <optional>
#include <utility>

#include "cokit/numeric.hpp"

namespace cokit {

inline bool scalar_is_zero(const Rational& q) { return sgn(q) == 0; }

namespace detail {

// Plain Gaussian elimination over an exact field scalar; `scalar_is_zero`
// is found by ADL for the scalar type in use.
template <typename Mat>
typename Mat::Scalar gauss_det(Mat a) {
  using S = typename Mat::Scalar;
  if (a.rows() != a.cols()) throw Error(Err::NotSquare, "determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  S det = S(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!scalar_is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return S(0);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = S(0) - det;
    }
    det = det * a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (scalar_is_zero(a(r, col))) continue;
      S f = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) = a(r, c) - f * a(col, c);
    }
  }
  return det;
}

template <typename Mat>
Mat gauss_invert(const Mat& a_in) {
  using S = typename Mat::Scalar;
  if (a_in.rows() != a_in.cols()) throw Error(Err::NotSquare, "inverse of a non-square matrix");
  const Eigen::Index n = a_in.rows();
  Mat a = a_in;
  Mat inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = (i == j) ? S(1) : S(0);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!scalar_is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error(Err::Singular, "matrix is singular");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    S p = a(col, col);
    for (Eigen::Index c = 0; c < n; ++c) {
      a(col, c) = a(col, c) / p;
      inv(col, c) = inv(col, c) / p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || scalar_is_zero(a(r, col))) continue;
      S f = a(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        a(r, c) = a(r, c) - f * a(col, c);
        inv(r, c) = inv(r, c) - f * inv(col, c);
      }
    }
  }
  return inv;
}

template <typename Mat>
int gauss_rank(Mat a) {
  using S = typename Mat::Scalar;  // a concrete scalar; gmpxx lazy expressions must not escape
  const Eigen::Index m = a.rows(), n = a.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m; ++r)
      if (!scalar_is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    for (Eigen::Index r = row + 1; r < m; ++r) {
      if (scalar_is_zero(a(r, col))) continue;
      S f = a(r, col) / a(row, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) = a(r, c) - f * a(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Any solution of A x = b, or nullopt if inconsistent (free variables set to 0).
template <typename Mat, typename Vec>
std::optional<Vec> gauss_solve(Mat a, Vec b) {
  using S = typename Mat::Scalar;
  const Eigen::Index m = a.rows(), n = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m; ++r)
      if (!scalar_is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      a.row(piv).swap(a.row(row));
      std::swap(b(piv), b(row));
    }
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r == row || scalar_is_zero(a(r, col))) continue;
      S f = a(r, col) / a(row, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) = a(r, c) - f * a(row, c);
      b(r) = b(r) - f * b(row);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (Eigen::Index r = row; r < m; ++r)
    if (!scalar_is_zero(b(r))) return std::nullopt;
  Vec x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = S(0);
  for (Eigen::Index r = 0; r < row; ++r) x(pivot_col[r]) = b(r) / a(r, pivot_col[r]);
  return x;
}

}  // namespace detail
}  // namespace cokit
