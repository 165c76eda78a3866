#pragma once

#include "ppav/matrix.hpp"

namespace ppav {

struct HermiteForm {
  IntegerMatrix H;  // row-style HNF of the input
  IntegerMatrix U;  // unimodular, H = U * A
};

struct SmithForm {
  IntegerMatrix S;  // diagonal, d_i >= 0, d_i | d_{i+1}
  IntegerMatrix U;  // unimodular row transform
  IntegerMatrix V;  // unimodular column transform, S = U * A * V
};

/// Canonical row HNF: pivots positive, entries above each pivot reduced into
/// [0, pivot), zero rows last. Deterministic for identical input.
HermiteForm hermite_normal_form(const IntegerMatrix& a);

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Basis of the saturated lattice {v : A v = 0} as matrix columns, in a
/// canonical HNF-reduced form. Returns a cols(A) x k matrix (k may be 0).
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Fraction-free exact determinant.
Integer determinant(const IntegerMatrix& a);

/// Rank over Z_p (p odd prime), entries reduced mod p first.
std::size_t rank_mod_p(const IntegerMatrix& a, const Integer& p);

// Field-scalar determinant and inverse by Gaussian elimination. Works for
// Rational and GaussianRational entries.
template <typename T>
T determinant(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  Matrix<T> m = a;
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == T(0)) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == T(0)) continue;
      T q = m(r, col) / m(col, col);
      m.row_axpy(r, col, q);
    }
  }
  return det;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> m = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == T(0)) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      m.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
    }
    T d = m(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) = m(col, c) / d;
      inv(col, c) = inv(col, c) / d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == T(0)) continue;
      T q = m(r, col);
      m.row_axpy(r, col, q);
      inv.row_axpy(r, col, q);
    }
  }
  return inv;
}

/// Exact Sylvester test: symmetric with all leading principal minors > 0.
bool is_positive_definite(const RationalMatrix& a);

/// Integer inverse of a unimodular matrix (|det| = 1).
IntegerMatrix unimodular_inverse(const IntegerMatrix& a);

}  // namespace ppav
