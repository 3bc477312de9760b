#pragma once

// Exact scalars and dense matrices over Z and Q.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyiso/errors.hpp"

namespace polyiso {

using Int = mpz_class;
/// GMP keeps rationals canonical: lowest terms, positive denominator.
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                           std::to_string(rows_ * cols_));
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const std::vector<T>> cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  const std::vector<T>& data() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector dimension mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

template <class T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RatVec to_rat(const IntVec& v);
RatMatrix to_rat(const IntMatrix& m);
/// Returns the integer vector when every entry has denominator 1.
std::optional<IntVec> to_int(const RatVec& v);
std::optional<IntMatrix> to_int(const RatMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);

/// Exact inverse over Q; throws SingularMatrixError when det = 0.
RatMatrix inverse_rational(const IntMatrix& m);
RatMatrix inverse_rational(const RatMatrix& m);

/// Rank over Q.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Affine rank of a point set: rank of the differences to the first point.
std::size_t affine_rank(std::span<const IntVec> points);

/// Integer matrix with determinant +1 or -1, checked at construction.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(IntMatrix m);

  static UnimodularMatrix identity(std::size_t n);

  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  /// Integral inverse.
  UnimodularMatrix inverse() const;
  Int determinant() const { return det(m_); }

  friend UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    return UnimodularMatrix(a.m_ * b.m_);
  }
  friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) { return a.m_ == b.m_; }
  friend bool operator<(const UnimodularMatrix& a, const UnimodularMatrix& b) { return a.m_ < b.m_; }

 private:
  IntMatrix m_;
};

/// True iff m is square with determinant +1 or -1.
bool is_unimodular(const IntMatrix& m);

/// x -> U x + Z with U unimodular and Z integral.
struct UnimodularAffineMap {
  UnimodularMatrix U;
  IntVec Z;

  UnimodularAffineMap(UnimodularMatrix u, IntVec z);
  static UnimodularAffineMap identity(std::size_t n);

  std::size_t dim() const noexcept { return U.dim(); }
  IntVec apply(const IntVec& x) const;
  /// (this o other)(x) = this(other(x)).
  UnimodularAffineMap compose(const UnimodularAffineMap& other) const;
  UnimodularAffineMap inverse() const;

  friend bool operator==(const UnimodularAffineMap& a, const UnimodularAffineMap& b) {
    return a.U == b.U && a.Z == b.Z;
  }
  friend bool operator<(const UnimodularAffineMap& a, const UnimodularAffineMap& b) {
    if (!(a.U == b.U)) return a.U < b.U;
    return a.Z < b.Z;
  }
};

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace polyiso
