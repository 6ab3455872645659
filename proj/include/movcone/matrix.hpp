#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "movcone/errors.hpp"
#include "movcone/quad_ext.hpp"
#include "movcone/rational.hpp"

namespace movcone {

template <typename T>
using Vec = std::vector<T>;

/// Dense square matrix over an exact field, row-major.
///
/// Element access uses 0-based (row, column) like any container; the
/// generator and permutation APIs built on top of it are 1-based.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw ParameterError("matrix literal is not square");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix out(dim);
    for (std::size_t k = 0; k < dim; ++k) out(k, k) = T(1);
    return out;
  }

  /// Builds the matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec<T>>& cols) {
    Matrix out(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != cols.size()) throw ParameterError("column length mismatch");
      for (std::size_t r = 0; r < cols.size(); ++r) out(r, c) = cols[c][r];
    }
    return out;
  }

  std::size_t dim() const { return dim_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const T> entries() const { return data_; }

  Vec<T> column(std::size_t c) const {
    Vec<T> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Vec<T> row(std::size_t r) const { return Vec<T>(data_.begin() + r * dim_, data_.begin() + (r + 1) * dim_); }

  Matrix transpose() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  T trace() const {
    T s(0);
    for (std::size_t k = 0; k < dim_; ++k) s += (*this)(k, k);
    return s;
  }

  bool is_symmetric() const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = r + 1; c < dim_; ++c)
        if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(dim_); }

  /// Elementwise conversion, e.g. Matrix<Rational> -> Matrix<QuadExt>.
  template <typename U>
  Matrix<U> cast() const {
    Matrix<U> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) = U((*this)(r, c));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const T& x = a(r, k);
        if (x == T(0)) continue;
        for (std::size_t c = 0; c < a.dim_; ++c) out(r, c) += x * b(k, c);
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (v.size() != a.dim_) throw ParameterError("matrix-vector dimension mismatch");
    Vec<T> out(a.dim_, T(0));
    for (std::size_t r = 0; r < a.dim_; ++r)
      for (std::size_t c = 0; c < a.dim_; ++c) out[r] += a(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_)
      throw ParameterError("dimension mismatch: " + std::to_string(a.dim_) + " vs " + std::to_string(b.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using QuadMatrix = Matrix<QuadExt>;

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b;
}

template <typename T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
  Matrix<T> out = Matrix<T>::identity(a.dim());
  for (unsigned e = 0; e < k; ++e) out = out * a;
  return out;
}

template <typename T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw ParameterError("dot product dimension mismatch");
  T s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

/// v^T * A * v.
template <typename T>
T quadratic_form(const Matrix<T>& a, const Vec<T>& v) {
  return dot(v, a * v);
}

inline Vec<Rational> apply(const RatMatrix& a, const IntVec& v) { return a * to_rational(v); }

/// True when every entry is an integer.
inline bool is_integral(const RatMatrix& a) {
  for (const auto& x : a.entries())
    if (!is_integer(x)) return false;
  return true;
}

}  // namespace movcone
