#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "movcone/bir_group.hpp"
#include "oracles.hpp"

using namespace movcone;

namespace {

std::string key(const RatMatrix& a) {
  std::string s;
  for (const auto& x : a.entries()) s += to_string(x) + ",";
  return s;
}

PsiWord random_psi_word(int m, int len) {
  const auto pairs = psi_pairs(m);
  PsiWord w;
  while (static_cast<int>(w.length()) < len) {
    const auto [i, j] = pairs[oracle::uniform(0, static_cast<int>(pairs.size()) - 1)];
    const PsiWord before = w;
    w.append(i, j, oracle::uniform(0, 1) ? 1 : -1);
    if (w.length() < before.length()) w = before;  // keep the word freely reduced and growing
  }
  return w;
}

}  // namespace

TEST(BirGroup, GoldenPsiMatrices) {
  const CoxeterSystem s2 = build_system(2, 3);
  EXPECT_EQ(psi_matrix(s2, 1, 2), (RatMatrix{{-2, -3, 0}, {3, 4, 0}, {6, 12, 1}}));
  EXPECT_EQ(psi_matrix(s2, 1, 3), (RatMatrix{{-2, 0, -3}, {6, 1, 12}, {3, 0, 4}}));
  EXPECT_EQ(psi_matrix(s2, 2, 3), (RatMatrix{{1, 6, 12}, {0, -2, -3}, {0, 3, 4}}));
  const CoxeterSystem s3 = build_system(3, 3);
  EXPECT_EQ(psi_matrix(s3, 1, 2), (RatMatrix{{-3, -8, 0}, {8, 21, 0}, {12, 36, 1}}));
  EXPECT_EQ(psi_matrix(s3, 1, 3), (RatMatrix{{-3, 0, -8}, {12, 1, 36}, {8, 0, 21}}));
  EXPECT_EQ(psi_matrix(s3, 2, 3), (RatMatrix{{1, 12, 36}, {0, -3, -8}, {0, 8, 21}}));
}

TEST(BirGroup, PsiMatricesAgainstCoordinateFormula) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 2; m <= 5; ++m) {
      const CoxeterSystem sys = build_system(n, m);
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          if (i == j) continue;
          const RatMatrix expect = oracle::matrix_of(m, [&](Vec<Rational> x) {
            std::swap(x[i - 1], x[j - 1]);  // Per_{(i,j)}
            return oracle::t_action(n, i, oracle::t_action(n, j, oracle::t_action(n, i, x)));
          });
          EXPECT_EQ(psi_matrix(sys, i, j), expect);
          EXPECT_TRUE((psi_matrix(sys, i, j) * psi_matrix(sys, j, i)).is_identity());
          EXPECT_EQ(det(psi_matrix(sys, i, j)), 1);
        }
    }
  EXPECT_THROW(psi_matrix(build_system(2, 3), 1, 1), ParameterError);
}

TEST(BirGroup, FlopPullbacksInvertEachOther) {
  for (int m = 2; m <= 5; ++m) {
    const CoxeterSystem sys = build_system(2, m);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) {
        if (i == j) continue;
        EXPECT_TRUE((flop_pullback(sys, i, j) * flop_pullback(sys, j, i)).is_identity()) << i << "," << j;
      }
    EXPECT_EQ(flop_pullback(sys, 0, 1), sys.t(1));
    EXPECT_THROW(flop_pullback(sys, 0, m + 1), ParameterError);
  }
}

TEST(BirGroup, SwapLemmaExhaustive) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 4; ++m) {
      const CoxeterSystem sys = build_system(n, m);
      for (const auto& s : all_permutations(m))
        for (int i = 1; i <= m; ++i) EXPECT_TRUE(swap_lemma_check(sys, s, i));
    }
}

TEST(BirGroup, CharPolyIdentity) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m) {
      const CoxeterSystem sys = build_system(n, m);
      Vec<Rational> expect{Rational(1), Rational(-(n * n - 2)), Rational(1)};
      for (int k = 0; k < m - 2; ++k) expect = poly_mul(expect, {Rational(-1), Rational(1)});
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          if (i == j) continue;
          const RatMatrix a = sys.t(i) * sys.t(j);
          EXPECT_EQ(char_poly(a), expect);
          if (m <= 4) EXPECT_EQ(oracle::char_poly(a), expect);
        }
    }
}

TEST(BirGroup, OrderOfProducts) {
  for (int m = 2; m <= 5; ++m) {
    const CoxeterSystem s1 = build_system(1, m);
    const CoxeterSystem s2 = build_system(2, m);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        EXPECT_TRUE(power(s1.t(i) * s1.t(j), 3).is_identity());
        const RatMatrix a = s2.t(i) * s2.t(j);
        for (int k = 1; k <= 12; ++k) EXPECT_FALSE(power(a, k).is_identity());
        // Eigenvalue 1 only, with a nontrivial Jordan block.
        const RatMatrix shifted = a - RatMatrix::identity(m);
        EXPECT_NE(shifted, RatMatrix(m));
        EXPECT_EQ(power(shifted, 3), RatMatrix(m));
        EXPECT_EQ(std::get<EigenMarker>(eigen_pair(s2, i, j)), EigenMarker::n2_unipotent);
      }
    EXPECT_EQ(std::get<EigenMarker>(eigen_pair(s1, 1, 2)), EigenMarker::n1_finite_order);
  }
  for (int n = 3; n <= 6; ++n) EXPECT_GT(lambda_for(n), QuadExt(1));
  EXPECT_THROW(lambda_for(2), ParameterError);
}

TEST(BirGroup, EigenPairForNThree) {
  const CoxeterSystem sys = build_system(3, 3);
  const auto e = std::get<EigenPair>(eigen_pair(sys, 1, 2));
  EXPECT_EQ(e.eigenvalue, QuadExt(Rational(7, 2), Rational(3, 2), 5));
  EXPECT_EQ(e.eigenvector, (Vec<QuadExt>{QuadExt(1, -1, 5), QuadExt(1, 1, 5), QuadExt(6)}));
  for (int n = 3; n <= 5; ++n)
    for (int m = 3; m <= 4; ++m) {
      const CoxeterSystem s = build_system(n, m);
      for (const auto& [i, j] : psi_pairs(m)) {
        const auto p = std::get<EigenPair>(eigen_pair(s, i, j));
        const QuadExt& l = p.eigenvalue;
        EXPECT_TRUE((l * l - QuadExt(n * n - 2) * l + QuadExt(1)).is_zero());
        const Vec<QuadExt> image = (s.t(i) * s.t(j)).cast<QuadExt>() * p.eigenvector;
        for (std::size_t k = 0; k < image.size(); ++k) EXPECT_EQ(image[k], l * p.eigenvector[k]);
        EXPECT_TRUE(quadratic_form(s.quadric().cast<QuadExt>(), p.eigenvector).is_zero());
        EXPECT_NEAR(l.to_double(), ((n * n - 2) + std::sqrt((n * n - 2.0) * (n * n - 2) - 4)) / 2, 1e-9);
      }
    }
}

TEST(BirGroup, NormalFormMatchesMatrices) {
  for (int n : {2, 3})
    for (int m : {3, 4}) {
      const CoxeterSystem sys = build_system(n, m);
      for (int k = 0; k < 200; ++k) {
        const PsiWord w = random_psi_word(m, oracle::uniform(1, 6));
        EXPECT_EQ(nf_matrix(sys, t_normal_form(sys, w)), psi_word_matrix(sys, w));
        EXPECT_TRUE((t_normal_form(sys, w) * t_normal_form(sys, w.inverse())).is_identity());
      }
    }
}

TEST(BirGroup, FreeProductCounts) {
  const FreeReport r23 = verify_free(build_system(2, 3), 4);
  EXPECT_EQ(r23.words_checked, 936u);
  EXPECT_EQ(r23.collisions, 0u);
  const FreeReport r34 = verify_free(build_system(3, 4), 3);
  // 12 + 12*11 + 12*11^2 freely reduced words over 6 generators and inverses.
  EXPECT_EQ(r34.words_checked, 12u + 132u + 1452u);
  EXPECT_EQ(r34.collisions, 0u);
}

TEST(BirGroup, FreeProductByMatrices) {
  // Distinct matrices for all reduced psi-words of length <= 3, none equal to I.
  const CoxeterSystem sys = build_system(2, 3);
  std::set<std::string> seen{key(RatMatrix::identity(3))};
  std::size_t words = 0;
  for_each_reduced_psi_word(3, 3, [&](const PsiWord& w) {
    ++words;
    EXPECT_TRUE(seen.insert(key(psi_word_matrix(sys, w))).second);
  });
  EXPECT_EQ(words, 6u + 30u + 150u);
}

TEST(BirGroup, PrefixProperty) {
  std::size_t checked = 0;
  for (int n : {2, 3})
    for (int m : {3, 4})
      for (int k = 0; k < 2600; ++k) {
        const PsiWord w = random_psi_word(m, oracle::uniform(1, 8));
        EXPECT_TRUE(prefix_check(build_system(n, m), w));
        ++checked;
      }
  EXPECT_GE(checked, 10000u);
  EXPECT_THROW(prefix_check(build_system(2, 3), PsiWord{}), ParameterError);
}

TEST(BirGroup, PsiFromTLeavesAtMostOneLetter) {
  for (int m : {3, 4}) {
    const CoxeterSystem sys = build_system(2, m);
    for (int k = 0; k < 300; ++k) {
      const TWord w{oracle::random_t_word(m, oracle::uniform(0, 7))};
      const PsiWord psi = psi_from_t(sys, w);
      // Psi^{-1} T(w) must be Per_tau or t_k Per_tau; find it by brute force.
      const RatMatrix rest = mat_inverse(psi_word_matrix(sys, psi)) * t_word_matrix(sys, w);
      bool found = false;
      for (const auto& s : all_permutations(m)) {
        if (rest == perm_matrix(s)) found = true;
        for (int i = 1; i <= m; ++i)
          if (rest == sys.t(i) * perm_matrix(s)) found = true;
      }
      EXPECT_TRUE(found);
    }
  }
  EXPECT_THROW(psi_from_t(build_system(2, 3), TWord{{1, 1}}), ParameterError);
}

TEST(BirGroup, WordSystemsNeedNAtLeastTwo) {
  EXPECT_THROW(verify_free(build_system(1, 3), 2), ParameterError);
  EXPECT_THROW(t_normal_form(build_system(1, 3), PsiWord::generator(1, 2)), ParameterError);
}

TEST(BirGroup, AutCodimension) {
  EXPECT_EQ(aut_codimension(3, 3), 4);
  for (int n = 3; n <= 6; ++n)
    for (int m = 3; m <= 6; ++m) {
      long long p = 1;
      for (int k = 0; k < m; ++k) p *= n + 1;
      EXPECT_EQ(aut_codimension(n, m), p - (m + 1) * ((n + 1) * (n + 1) - 1));
    }
  EXPECT_THROW(aut_codimension(2, 3), ParameterError);
}

TEST(Budget, CountsMatchBruteForce) {
  for (int letters = 1; letters <= 4; ++letters)
    for (int depth = 0; depth <= 5; ++depth)
      EXPECT_EQ(count_reduced_words(letters, depth, true), oracle::reduced_words_brute(letters, depth).size());
  EXPECT_EQ(count_reduced_words(50, 40, true), UINT64_MAX);
  EXPECT_THROW(check_budget(11, 10, "x"), BudgetExceeded);
}

TEST(Budget, EnvironmentOverride) {
  ::setenv(kWordBudgetEnv, "100", 1);
  EXPECT_EQ(word_budget(), 100u);
  EXPECT_THROW(verify_free(build_system(2, 3), 4), BudgetExceeded);
  ::setenv(kWordBudgetEnv, "nope", 1);
  EXPECT_THROW(word_budget(), ParameterError);
  ::unsetenv(kWordBudgetEnv);
  EXPECT_EQ(word_budget(), kDefaultWordBudget);
}
