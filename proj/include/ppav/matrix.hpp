#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "ppav/errors.hpp"
#include "ppav/scalars.hpp"

namespace ppav {

/// Dense row-major matrix over an exact scalar. Values are immutable in
/// practice: every operation returns a fresh matrix.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
    return (*this)(i, j);
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  T trace() const {
    if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
    T t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Lexicographic order on (rows, cols, entries); used for deterministic sets.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      int c = compare(a.data_[k], b.data_[k]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw IndexOutOfRange("submatrix out of range");
    Matrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
  }

  void paste(std::size_t r0, std::size_t c0, const Matrix& block) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
      throw IndexOutOfRange("paste out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
      for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hstack row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    r.paste(0, 0, a);
    r.paste(0, a.cols_, b);
    return r;
  }
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    r.paste(0, 0, a);
    r.paste(a.rows_, 0, b);
    return r;
  }
  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    r.paste(0, 0, a);
    r.paste(a.rows_, a.cols_, b);
    return r;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row i -= q * row j
  void row_axpy(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) -= q * (*this)(j, c);
  }
  void col_axpy(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) -= q * (*this)(r, j);
  }
  void scale_row(std::size_t i, const T& s) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = s * (*this)(i, c);
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using GaussianMatrix = Matrix<GaussianRational>;

inline RationalMatrix to_rational(const IntegerMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

inline GaussianMatrix to_gaussian(const IntegerMatrix& a) {
  GaussianMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = GaussianRational(Rational(a(i, j)));
  return r;
}

inline GaussianMatrix to_gaussian(const RationalMatrix& a) {
  GaussianMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = GaussianRational(a(i, j));
  return r;
}

inline RationalMatrix real_part(const GaussianMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).re;
  return r;
}

inline RationalMatrix imag_part(const GaussianMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).im;
  return r;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << "]" << (i + 1 == m.rows() ? "" : "\n");
  }
  return os << "]";
}

}  // namespace ppav
