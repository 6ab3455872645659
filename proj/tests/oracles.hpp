#pragma once

// Independent reference computations used to cross-check the library. None
// of these call into the code under test beyond the scalar and matrix types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "movcone/matrix.hpp"
#include "movcone/rational.hpp"

namespace oracle {

using movcone::BigInt;
using movcone::IntVec;
using movcone::RatMatrix;
using movcone::Rational;
using movcone::Vec;

// Leibniz formula.
inline Rational det(const RatMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// det(xI - A) sampled at x = 0..n and interpolated; constant term first.
inline Vec<Rational> char_poly(const RatMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Rational> xs, ys;
  for (std::size_t s = 0; s <= n; ++s) {
    RatMatrix shifted = Rational(static_cast<long long>(s)) * RatMatrix::identity(n) - a;
    xs.push_back(Rational(static_cast<long long>(s)));
    ys.push_back(det(shifted));
  }
  Vec<Rational> coeffs(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    // Lagrange basis polynomial for node i.
    Vec<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      Vec<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k] -= basis[k] * xs[j];
        next[k + 1] += basis[k];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] += ys[i] * basis[k] / denom;
  }
  return coeffs;
}

struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
};

// Descartes' rule of signs is exact for real-rooted polynomials such as the
// characteristic polynomial of a symmetric matrix.
inline Inertia signature_by_descartes(const RatMatrix& a) {
  const Vec<Rational> p = oracle::char_poly(a);
  Inertia out;
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  out.zeros = static_cast<int>(low);
  auto changes = [&](bool negate_odd) {
    int count = 0;
    int last = 0;
    for (std::size_t k = low; k < p.size(); ++k) {
      int s = p[k].sign();
      if (negate_odd && k % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  out.positives = changes(false);
  out.negatives = changes(true);
  return out;
}

// (aI + bJ)^{-1} = (1/a) I - b / (a (a + m b)) J.
inline RatMatrix family_gram_inverse(int n, int m) {
  const Rational a = Rational(1) + Rational(n, 2);
  const Rational b = Rational(-n, 2);
  RatMatrix out(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) out(r, c) = (r == c ? 1 / a : Rational(0)) - b / (a * (a + m * b));
  return out;
}

// t_i x without matrices: x_k + n x_i for k != i and -x_i at i (1-based i).
inline Vec<Rational> t_action(int n, int i, Vec<Rational> x) {
  const Rational xi = x[i - 1];
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = (static_cast<int>(k) == i - 1) ? Rational(-xi) : Rational(x[k] + n * xi);
  return x;
}

// Matrix whose column c is f(e_c).
template <typename F>
RatMatrix matrix_of(int m, F&& f) {
  RatMatrix out(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    Vec<Rational> e(m, Rational(0));
    e[c] = 1;
    const Vec<Rational> img = f(e);
    for (int r = 0; r < m; ++r) out(r, c) = img[r];
  }
  return out;
}

// All words of length <= depth over 1..letters, filtered to those with no
// equal adjacent letters.
inline std::vector<std::vector<int>> reduced_words_brute(int letters, int depth) {
  std::vector<std::vector<int>> all{{}};
  std::vector<std::vector<int>> level{{}};
  for (int l = 1; l <= depth; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level)
      for (int k = 1; k <= letters; ++k) {
        auto c = w;
        c.push_back(k);
        next.push_back(c);
      }
    level = next;
    for (const auto& w : level) {
      bool ok = true;
      for (std::size_t k = 1; k < w.size(); ++k) ok = ok && w[k] != w[k - 1];
      if (ok) all.push_back(w);
    }
  }
  return all;
}

inline IntVec cross(const IntVec& u, const IntVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline BigInt dot(const IntVec& u, const IntVec& v) {
  BigInt s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// A random freely reduced t-word of length len over 1..m.
inline std::vector<int> random_t_word(int m, int len) {
  std::vector<int> w;
  while (static_cast<int>(w.size()) < len) {
    const int k = uniform(1, m);
    if (w.empty() || w.back() != k) w.push_back(k);
  }
  return w;
}

inline Rational random_positive_rational() { return Rational(uniform(1, 40), uniform(1, 12)); }

}  // namespace oracle
