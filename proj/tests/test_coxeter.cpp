#include <gtest/gtest.h>

#include "movcone/coxeter.hpp"
#include "oracles.hpp"

using namespace movcone;

namespace {

bool proportional(const RatMatrix& a, const RatMatrix& b) {
  Rational ratio = 0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if ((a(r, c) == 0) != (b(r, c) == 0)) return false;
      if (a(r, c) == 0) continue;
      const Rational q = a(r, c) / b(r, c);
      if (ratio == 0) ratio = q;
      if (q != ratio) return false;
    }
  return ratio != 0;
}

}  // namespace

TEST(Coxeter, FamilyGramEntries) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m) {
      const CoxeterSystem sys = build_system(n, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) EXPECT_EQ(sys.gram()(r, c), r == c ? Rational(1) : Rational(-n, 2));
    }
}

TEST(Coxeter, ParameterRange) {
  EXPECT_THROW(build_system(0, 3), ParameterError);
  EXPECT_THROW(build_system(2, 1), ParameterError);
  EXPECT_THROW(build_system(1, 2, true), ParameterError);
  EXPECT_NO_THROW(build_system(1, 2));
  EXPECT_NO_THROW(build_system(2, 3, true));
  EXPECT_THROW(system_from_gram(RatMatrix{{1, 2}, {0, 1}}), ParameterError);
  EXPECT_THROW(system_from_gram(RatMatrix{{2, 0}, {0, 1}}), ParameterError);
}

TEST(Coxeter, RankThreeUniversalExample) {
  const CoxeterSystem sys = system_from_gram(RatMatrix{{1, -2, -2}, {-2, 1, -2}, {-2, -2, 1}});
  EXPECT_EQ(reflection_primal(sys, 1), (RatMatrix{{-1, 4, 4}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(reflection_primal(sys, 2), (RatMatrix{{1, 0, 0}, {4, -1, 4}, {0, 0, 1}}));
  EXPECT_EQ(reflection_primal(sys, 3), (RatMatrix{{1, 0, 0}, {0, 1, 0}, {4, 4, -1}}));
  EXPECT_EQ(reflection_dual(sys, 1), (RatMatrix{{-1, 0, 0}, {4, 1, 0}, {4, 0, 1}}));
  EXPECT_EQ(reflection_dual(sys, 2), (RatMatrix{{1, 4, 0}, {0, -1, 0}, {0, 4, 1}}));
  EXPECT_EQ(reflection_dual(sys, 3), (RatMatrix{{1, 0, 4}, {0, 1, 4}, {0, 0, -1}}));
  EXPECT_FALSE(sys.is_family());
}

TEST(Coxeter, DualGeneratorColumnFormula) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 2; m <= 5; ++m) {
      const CoxeterSystem sys = build_system(n, m);
      for (int i = 1; i <= m; ++i) {
        EXPECT_EQ(sys.t(i), oracle::matrix_of(m, [&](const Vec<Rational>& x) { return oracle::t_action(n, i, x); }));
        EXPECT_TRUE((sys.t(i) * sys.t(i)).is_identity());
        EXPECT_TRUE((sys.tau(i) * sys.tau(i)).is_identity());
        EXPECT_EQ(sys.t(i), sys.tau(i).transpose());
        // tau_i preserves the bilinear form.
        EXPECT_EQ(sys.tau(i).transpose() * sys.gram() * sys.tau(i), sys.gram());
      }
      EXPECT_THROW(sys.t(0), ParameterError);
      EXPECT_THROW(sys.t(m + 1), ParameterError);
    }
  EXPECT_EQ(build_system(2, 3).t(1), (RatMatrix{{-1, 0, 0}, {2, 1, 0}, {2, 0, 1}}));
}

TEST(Coxeter, PermutationMatrices) {
  EXPECT_EQ(perm_matrix(Permutation::transposition(3, 1, 2)), (RatMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  const auto perms = all_permutations(3);
  for (const auto& s : perms)
    for (const auto& t : perms) EXPECT_EQ(perm_matrix(s) * perm_matrix(t), perm_matrix(s * t));
  const Permutation c = Permutation::cycle(3, {1, 2, 3});
  for (int l = 1; l <= 3; ++l) {
    Vec<Rational> e(3, Rational(0));
    e[l - 1] = 1;
    Vec<Rational> expect(3, Rational(0));
    expect[c(l) - 1] = 1;
    EXPECT_EQ(perm_matrix(c) * e, expect);
  }
}

TEST(Coxeter, QuadricAgainstClosedFormInverse) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m) {
      const CoxeterSystem sys = build_system(n, m);
      const bool singular = Rational(1) - Rational(n * (m - 1), 2) == 0;
      EXPECT_EQ(sys.has_quadric(), !singular);
      if (singular) {
        EXPECT_THROW(quadric_matrix(sys), DomainError);
        continue;
      }
      const RatMatrix& q = quadric_matrix(sys);
      EXPECT_TRUE(proportional(q, oracle::family_gram_inverse(n, m)));
      EXPECT_TRUE(is_integral(q));
      BigInt g = 0;
      for (const auto& x : q.entries()) g = gcd_int(g, numerator_of(x));
      EXPECT_EQ(g, 1);
      EXPECT_GT(quadratic_form(q, Vec<Rational>(m, Rational(1))), 0);
    }
}

TEST(Coxeter, QuadricGoldenForms) {
  EXPECT_EQ(quadric_matrix(build_system(2, 3)), (RatMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  // t0^2 - 6 t0 t1 + t1^2 - 6 t0 t2 - 6 t1 t2 + t2^2, up to the overall scale.
  EXPECT_TRUE(proportional(quadric_matrix(build_system(3, 3)), RatMatrix{{1, -3, -3}, {-3, 1, -3}, {-3, -3, 1}}));
  EXPECT_EQ(quadratic_form(quadric_matrix(build_system(2, 3)), Vec<Rational>{1, 0, 0}), 0);
}

TEST(Coxeter, LorentzianSignature) {
  EXPECT_TRUE(build_system(2, 3).lorentzian());
  EXPECT_TRUE(build_system(3, 3).lorentzian());
  EXPECT_FALSE(build_system(1, 3).lorentzian());
  for (int n = 1; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m) {
      const CoxeterSystem sys = build_system(n, m);
      const oracle::Inertia o = oracle::signature_by_descartes(sys.gram());
      const Inertia s = signature(sys.gram());
      EXPECT_EQ(s.positives, o.positives);
      EXPECT_EQ(s.negatives, o.negatives);
      EXPECT_EQ(s.zeros, o.zeros);
      if (2 - n * (m - 1) < 0) {
        EXPECT_TRUE(sys.lorentzian()) << n << "," << m;
        EXPECT_EQ(s, (Inertia{m - 1, 1, 0}));
      }
    }
}

TEST(Coxeter, GramEigenData) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m) EXPECT_TRUE(gram_eigen_check(build_system(n, m)));
  EXPECT_EQ(gram_eigenvalues(build_system(2, 3)), std::make_pair(Rational(2), Rational(-1)));
  EXPECT_EQ(gram_eigenvalues(build_system(3, 3)), std::make_pair(Rational(5, 2), Rational(-2)));
  EXPECT_EQ(gram_eigenvalues(build_system(1, 3)).second, Rational(0));
  // A Gram matrix outside the family fails the check.
  EXPECT_FALSE(gram_eigen_check(system_from_gram(RatMatrix{{1, -1, -2}, {-1, 1, -1}, {-2, -1, 1}})));
}

TEST(Coxeter, QuadricInvariance) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 2; m <= 5; ++m) {
      const CoxeterSystem sys = build_system(n, m);
      if (!sys.has_quadric()) continue;
      const RatMatrix& q = sys.quadric();
      for (int i = 1; i <= m; ++i) EXPECT_EQ(sys.t(i).transpose() * q * sys.t(i), q);
      for (const auto& s : all_permutations(m)) EXPECT_EQ(perm_matrix(s).transpose() * q * perm_matrix(s), q);
    }
}
