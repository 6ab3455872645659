#pragma once

#include <optional>
#include <string>
#include <vector>

#include "movcone/linalg.hpp"
#include "movcone/permutation.hpp"

namespace movcone {

/// Coxeter system (W, S)_Q with its Gram matrix and the dual generator
/// matrices t_i.
///
/// Systems of the (n, m) family have Q_ii = 1 and Q_ij = -n/2. A system built
/// from an explicit Gram matrix reports n() == 0; word-level operations
/// reject such systems.
class CoxeterSystem {
 public:
  int n() const { return n_; }
  int m() const { return m_; }
  const RatMatrix& gram() const { return gram_; }
  bool lorentzian() const { return lorentzian_; }
  bool is_family() const { return n_ > 0; }

  /// Dual generator t_i, 1 <= i <= m.
  const RatMatrix& t(int i) const {
    check_index(i);
    return duals_[i - 1];
  }

  /// Primal reflection tau_i, 1 <= i <= m.
  RatMatrix tau(int i) const { return t(i).transpose(); }

  /// Primitive integer rescaling of Q^{-1}; throws DomainError when Q is singular.
  const RatMatrix& quadric() const {
    if (!quadric_) throw DomainError("Gram matrix is singular; no quadric");
    return *quadric_;
  }
  bool has_quadric() const { return quadric_.has_value(); }

  void check_index(int i) const {
    if (i < 1 || i > m_)
      throw ParameterError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(m_));
  }

  friend CoxeterSystem build_system(int n, int m, bool enforce_range);
  friend CoxeterSystem system_from_gram(RatMatrix gram);

 private:
  CoxeterSystem() = default;
  void finish();

  int n_ = 0;
  int m_ = 0;
  RatMatrix gram_;
  bool lorentzian_ = false;
  std::vector<RatMatrix> duals_;
  std::optional<RatMatrix> quadric_;
};

namespace detail {

// Integer-primitive multiple of q, sign chosen so that 1^T q 1 > 0.
inline RatMatrix normalize_quadric(const RatMatrix& q) {
  const std::size_t m = q.dim();
  BigInt l = 1;
  for (const auto& x : q.entries()) l = lcm_int(l, denominator_of(x));
  BigInt g = 0;
  for (const auto& x : q.entries()) g = gcd_int(g, numerator_of(x) * (l / denominator_of(x)));
  Rational scale(l, g == 0 ? BigInt(1) : g);
  Rational total = 0;
  for (const auto& x : q.entries()) total += x;
  if (total < 0) scale = -scale;
  RatMatrix out(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out(r, c) = q(r, c) * scale;
  return out;
}

}  // namespace detail

inline void CoxeterSystem::finish() {
  m_ = static_cast<int>(gram_.dim());
  duals_.clear();
  for (int i = 1; i <= m_; ++i) {
    // tau_i(alpha_k) = alpha_k - 2 Q(alpha_k, alpha_i) alpha_i: identity with
    // row i replaced. t_i is its transpose: column i replaced.
    RatMatrix t = RatMatrix::identity(m_);
    for (int k = 1; k <= m_; ++k) t(k - 1, i - 1) -= 2 * gram_(i - 1, k - 1);
    duals_.push_back(std::move(t));
  }
  lorentzian_ = signature(gram_) == Inertia{m_ - 1, 1, 0};
  try {
    quadric_ = detail::normalize_quadric(mat_inverse(gram_));
  } catch (const DomainError&) {
    quadric_.reset();
  }
}

/// The system of the (n, m) family. With enforce_range the parameters
/// must also satisfy nm - (n + 1) >= 3.
inline CoxeterSystem build_system(int n, int m, bool enforce_range = false) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (m < 2) throw ParameterError("m must be >= 2");
  if (enforce_range && n * m - (n + 1) < 3)
    throw ParameterError("parameters violate nm - (n+1) >= 3 (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                         ")");
  CoxeterSystem sys;
  sys.n_ = n;
  sys.gram_ = RatMatrix(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) sys.gram_(r, c) = r == c ? Rational(1) : Rational(-n, 2);
  sys.finish();
  return sys;
}

/// Low-level constructor for an explicit Gram matrix (symmetric, unit diagonal).
inline CoxeterSystem system_from_gram(RatMatrix gram) {
  if (gram.dim() < 2) throw ParameterError("Gram matrix must have dimension >= 2");
  if (!gram.is_symmetric()) throw ParameterError("Gram matrix must be symmetric");
  for (std::size_t k = 0; k < gram.dim(); ++k)
    if (gram(k, k) != 1) throw ParameterError("Gram matrix must have unit diagonal");
  CoxeterSystem sys;
  sys.gram_ = std::move(gram);
  sys.finish();
  return sys;
}

inline RatMatrix reflection_primal(const CoxeterSystem& sys, int i) { return sys.tau(i); }

inline RatMatrix reflection_dual(const CoxeterSystem& sys, int i) { return sys.t(i); }

/// Column l is the standard vector e_{sigma(l)}.
inline RatMatrix perm_matrix(const Permutation& sigma) {
  const int m = sigma.size();
  RatMatrix out(static_cast<std::size_t>(m));
  for (int l = 1; l <= m; ++l) out(sigma(l) - 1, l - 1) = 1;
  return out;
}

inline RatMatrix quadric_matrix(const CoxeterSystem& sys) { return sys.quadric(); }

/// Checks Q (e_1 - e_i) = (1 + n/2)(e_1 - e_i) for i = 2..m and
/// Q 1 = (1 - n(m-1)/2) 1. Only meaningful for family systems.
inline bool gram_eigen_check(const CoxeterSystem& sys) {
  if (!sys.is_family()) return false;
  const int m = sys.m();
  const Rational lambda1 = Rational(1) + Rational(sys.n(), 2);
  const Rational lambda2 = Rational(1) - Rational(sys.n() * (m - 1), 2);
  for (int i = 2; i <= m; ++i) {
    Vec<Rational> v(m, Rational(0));
    v[0] = 1;
    v[i - 1] = -1;
    Vec<Rational> expect = v;
    for (auto& x : expect) x *= lambda1;
    if (sys.gram() * v != expect) return false;
  }
  const Vec<Rational> ones(m, Rational(1));
  return sys.gram() * ones == Vec<Rational>(m, lambda2);
}

/// Largest (lambda_1) and smallest (lambda_2) eigenvalues of the family Gram matrix.
inline std::pair<Rational, Rational> gram_eigenvalues(const CoxeterSystem& sys) {
  return {Rational(1) + Rational(sys.n(), 2), Rational(1) - Rational(sys.n() * (sys.m() - 1), 2)};
}

}  // namespace movcone
