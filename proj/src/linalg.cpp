#include "ppav/linalg.hpp"

#include <cstdlib>
#include <vector>

namespace ppav {

namespace {

// Index of the row in [from, rows) whose |entry| in `col` is smallest nonzero,
// or rows() when the column is already clear.
std::size_t smallest_nonzero_row(const IntegerMatrix& m, std::size_t col, std::size_t from) {
  std::size_t best = m.rows();
  Integer best_abs;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m(r, col) == 0) continue;
    Integer a = abs(m(r, col));
    if (best == m.rows() || a < best_abs) {
      best = r;
      best_abs = a;
    }
  }
  return best;
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // gcd-reduce the column below pivot_row until a single nonzero remains
    for (;;) {
      std::size_t r = smallest_nonzero_row(h, col, pivot_row);
      if (r == h.rows()) break;
      if (r != pivot_row) {
        h.swap_rows(pivot_row, r);
        u.swap_rows(pivot_row, r);
      }
      bool clear = true;
      for (std::size_t rr = pivot_row + 1; rr < h.rows(); ++rr) {
        if (h(rr, col) == 0) continue;
        Integer q = div_round(h(rr, col), h(pivot_row, col));
        h.row_axpy(rr, pivot_row, q);
        u.row_axpy(rr, pivot_row, q);
        if (h(rr, col) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.scale_row(pivot_row, Integer(-1));
      u.scale_row(pivot_row, Integer(-1));
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q = div_floor(h(r, col), h(pivot_row, col));
      if (q == 0) continue;
      h.row_axpy(r, pivot_row, q);
      u.row_axpy(r, pivot_row, q);
    }
    ++pivot_row;
  }
  return {h, u};
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  IntegerMatrix s = a;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  IntegerMatrix v = IntegerMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < n; ++t) {
    // bring the absolutely smallest nonzero entry of the trailing block to (t,t)
    auto find_pivot = [&](std::size_t& pi, std::size_t& pj) -> bool {
      bool found = false;
      Integer best;
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s(i, j) == 0) continue;
          Integer av = abs(s(i, j));
          if (!found || av < best) {
            found = true;
            best = av;
            pi = i;
            pj = j;
          }
        }
      return found;
    };

    std::size_t pi = t, pj = t;
    if (!find_pivot(pi, pj)) break;
    if (pi != t) {
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
    }
    if (pj != t) {
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);
    }

    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < s.rows(); ++r) {
        if (s(r, t) == 0) continue;
        Integer q = div_round(s(r, t), s(t, t));
        s.row_axpy(r, t, q);
        u.row_axpy(r, t, q);
        dirty = dirty || s(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < s.cols(); ++c) {
        if (s(t, c) == 0) continue;
        Integer q = div_round(s(t, c), s(t, t));
        s.col_axpy(c, t, q);
        v.col_axpy(c, t, q);
        dirty = dirty || s(t, c) != 0;
      }
      if (dirty) {
        // residues may now be smaller than the pivot; re-center and repeat
        std::size_t qi = t, qj = t;
        find_pivot(qi, qj);
        if (qi != t) {
          s.swap_rows(t, qi);
          u.swap_rows(t, qi);
        }
        if (qj != t) {
          s.swap_cols(t, qj);
          v.swap_cols(t, qj);
        }
        continue;
      }
      // divisibility: the pivot must divide every remaining entry
      bool fixed = false;
      for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < s.cols() && !fixed; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            s.row_axpy(t, i, Integer(-1));  // row t += row i
            u.row_axpy(t, i, Integer(-1));
            fixed = true;
          }
        }
      if (!fixed) break;
    }

    if (s(t, t) < 0) {
      s.scale_row(t, Integer(-1));
      u.scale_row(t, Integer(-1));
    }
  }
  return {s, u, v};
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  SmithForm snf = smith_normal_form(a);
  const std::size_t n = a.cols();
  std::vector<std::size_t> kernel_cols;
  for (std::size_t j = 0; j < n; ++j) {
    bool zero_diag = j >= std::min(a.rows(), a.cols()) || snf.S(j, j) == 0;
    if (zero_diag) kernel_cols.push_back(j);
  }
  IntegerMatrix basis_rows(kernel_cols.size(), n);
  for (std::size_t k = 0; k < kernel_cols.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) basis_rows(k, i) = snf.V(i, kernel_cols[k]);
  // canonicalize so equal lattices give identical bases
  HermiteForm hf = hermite_normal_form(basis_rows);
  IntegerMatrix basis(n, kernel_cols.size());
  for (std::size_t k = 0; k < kernel_cols.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) basis(i, k) = hf.H(k, i);
  return basis;
}

Integer determinant(const IntegerMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntegerMatrix m = a;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_mod_p(const IntegerMatrix& a, const Integer& p) {
  IntegerMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = mod_floor(a(i, j), p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) m.swap_rows(pivot, rank);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), m(rank, col).get_mpz_t(), p.get_mpz_t()) == 0)
      throw InternalInconsistency("pivot not invertible mod p");
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Integer factor = mod_floor(m(r, col) * inv, p);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = mod_floor(m(r, c) - factor * m(rank, c), p);
    }
    ++rank;
  }
  return rank;
}

bool is_positive_definite(const RationalMatrix& a) {
  if (!a.is_square() || !a.is_symmetric()) throw NotSymmetric("matrix is not symmetric");
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    Rational minor = determinant(a.submatrix(0, 0, k, k));
    if (minor <= 0) return false;
  }
  return true;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& a) {
  Integer d = determinant(a);
  if (d != 1 && d != -1) throw SingularMatrix("matrix is not unimodular");
  RationalMatrix inv = inverse(to_rational(a));
  IntegerMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (inv(i, j).get_den() != 1)
        throw InternalInconsistency("unimodular inverse has non-integer entry");
      r(i, j) = inv(i, j).get_num();
    }
  return r;
}

}  // namespace ppav
