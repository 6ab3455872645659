#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "movcone/matrix.hpp"

namespace movcone {

/// Determinant by Gaussian elimination over the field T.
template <typename T>
T det(Matrix<T> a) {
  const std::size_t m = a.dim();
  T result(1);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    while (p < m && a(p, k) == T(0)) ++p;
    if (p == m) return T(0);
    if (p != k) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a(k, c), a(p, c));
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t r = k + 1; r < m; ++r) {
      if (a(r, k) == T(0)) continue;
      const T f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < m; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return result;
}

/// Exact inverse by Gauss-Jordan elimination; throws DomainError when singular.
template <typename T>
Matrix<T> mat_inverse(Matrix<T> a) {
  const std::size_t m = a.dim();
  Matrix<T> inv = Matrix<T>::identity(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    while (p < m && a(p, k) == T(0)) ++p;
    if (p == m) throw DomainError("singular matrix");
    if (p != k) {
      for (std::size_t c = 0; c < m; ++c) {
        std::swap(a(k, c), a(p, c));
        std::swap(inv(k, c), inv(p, c));
      }
    }
    const T pivot = a(k, k);
    for (std::size_t c = 0; c < m; ++c) {
      a(k, c) /= pivot;
      inv(k, c) /= pivot;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == k || a(r, k) == T(0)) continue;
      const T f = a(r, k);
      for (std::size_t c = 0; c < m; ++c) {
        a(r, c) -= f * a(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

/// Basis of the right null space {x : A x = 0}, from the reduced row echelon
/// form. Each basis vector has a 1 in its free coordinate.
template <typename T>
std::vector<Vec<T>> nullspace(Matrix<T> a) {
  const std::size_t m = a.dim();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a(p, col) == T(0)) ++p;
    if (p == m) continue;
    for (std::size_t c = 0; c < m; ++c) std::swap(a(row, c), a(p, c));
    const T pivot = a(row, col);
    for (std::size_t c = 0; c < m; ++c) a(row, c) /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a(r, col) == T(0)) continue;
      const T f = a(r, col);
      for (std::size_t c = 0; c < m; ++c) a(r, c) -= f * a(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < m; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    Vec<T> v(m, T(0));
    v[free] = T(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
std::size_t rank(const Matrix<T>& a) {
  return a.dim() - nullspace(a).size();
}

/// Monic characteristic polynomial det(xI - A), coefficients constant term
/// first. Faddeev-LeVerrier recursion, exact over the rationals.
inline std::vector<Rational> char_poly(const RatMatrix& a) {
  const std::size_t m = a.dim();
  std::vector<Rational> coeff(m + 1, Rational(0));
  coeff[m] = 1;
  RatMatrix running(m);  // M_0 = 0
  const RatMatrix id = RatMatrix::identity(m);
  for (std::size_t k = 1; k <= m; ++k) {
    running = a * running + coeff[m - k + 1] * id;
    coeff[m - k] = -(a * running).trace() / Rational(static_cast<long long>(k));
  }
  return coeff;
}

/// Polynomial product, coefficients constant term first.
inline std::vector<Rational> poly_mul(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<Rational> out(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

/// Roots of x^2 + b x + c, larger root first, in Q(sqrt(d)) with d the
/// squarefree part of the discriminant. Throws DomainError when b^2 - 4c < 0.
inline std::pair<QuadExt, QuadExt> quad_roots(const Rational& b, const Rational& c) {
  const Rational disc = b * b - 4 * c;
  if (disc < 0) throw DomainError("negative discriminant " + to_string(disc));
  const Rational half_b = -b / 2;
  if (disc == 0) return {QuadExt(half_b), QuadExt(half_b)};
  // sqrt(p/q) = sqrt(p q) / q = k sqrt(d) / q.
  const BigInt p = numerator_of(disc);
  const BigInt q = denominator_of(disc);
  const auto [k, d] = squarefree_split(p * q);
  const Rational root_coeff = Rational(k, q) / 2;
  if (d == 1) return {QuadExt(half_b + root_coeff, 0, 1), QuadExt(half_b - root_coeff, 0, 1)};
  return {QuadExt(half_b, root_coeff, d), QuadExt(half_b, -root_coeff, d)};
}

struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric rational matrix by exact congruence
/// diagonalization (symmetric row/column operations with pivoting).
inline Inertia signature(const RatMatrix& input) {
  if (!input.is_symmetric()) throw DomainError("signature requires a symmetric matrix");
  RatMatrix a = input;
  const std::size_t m = a.dim();
  Inertia out;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < m; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < m && a(j, j) == 0) ++j;
      if (j < m) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < m && a(k, j) == 0) ++j;
        if (j == m) {
          ++out.zeros;  // row k is already zero
          continue;
        }
        // e_k <- e_k + e_j makes the diagonal 2 a(k, j) != 0.
        for (std::size_t c = 0; c < m; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < m; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational pivot = a(k, k);
    (pivot > 0 ? out.positives : out.negatives) += 1;
    for (std::size_t r = k + 1; r < m; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / pivot;
      for (std::size_t c = k; c < m; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = k; c < m; ++c) a(c, r) = a(r, c);
    }
  }
  return out;
}

}  // namespace movcone
