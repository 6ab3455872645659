#pragma once

#include <cstdint>
#include <set>
#include <variant>
#include <vector>

#include "movcone/budget.hpp"
#include "movcone/coxeter.hpp"
#include "movcone/words.hpp"

namespace movcone {

// Word-level results rely on the t_i generating a free product of Z/2's,
// which holds for the family with n >= 2 only.
inline void require_word_system(const CoxeterSystem& sys, const char* what) {
  if (!sys.is_family() || sys.n() < 2)
    throw ParameterError(std::string(what) + " requires a family system with n >= 2 (the t_i satisfy braid "
                                             "relations for n = 1)");
}

/// Matrix of phi_{i,j}^* between the marked bases B_j and B_i, 0 <= i, j <= m.
inline RatMatrix flop_pullback(const CoxeterSystem& sys, int i, int j) {
  const int m = sys.m();
  if (i == j) throw ParameterError("flop needs distinct models");
  if (i < 0 || j < 0 || i > m || j > m) throw ParameterError("model index outside 0..m");
  if (i < j) return sys.t(j) * perm_matrix(Permutation::consecutive_cycle(m, i + 1, j).inverse());
  return sys.t(j + 1) * perm_matrix(Permutation::consecutive_cycle(m, j + 1, i));
}

/// psi_{i,j}^* = t_i t_j t_i Per_{(i,j)}; psi_{j,i}^* is its inverse.
inline RatMatrix psi_matrix(const CoxeterSystem& sys, int i, int j) {
  if (i == j) throw ParameterError("psi generator needs distinct indices");
  sys.check_index(i);
  sys.check_index(j);
  return sys.t(i) * sys.t(j) * sys.t(i) * perm_matrix(Permutation::transposition(sys.m(), i, j));
}

/// Per_sigma t_i == t_{sigma(i)} Per_sigma, checked on matrices.
inline bool swap_lemma_check(const CoxeterSystem& sys, const Permutation& sigma, int i) {
  const RatMatrix p = perm_matrix(sigma);
  return p * sys.t(i) == sys.t(sigma(i)) * p;
}

inline RatMatrix t_word_matrix(const CoxeterSystem& sys, const TWord& w) {
  RatMatrix out = RatMatrix::identity(sys.m());
  for (int k : w.letters) out = out * sys.t(k);
  return out;
}

inline RatMatrix nf_matrix(const CoxeterSystem& sys, const GroupElementNF& g) {
  return t_word_matrix(sys, g.t_word) * perm_matrix(g.perm);
}

inline RatMatrix psi_word_matrix(const CoxeterSystem& sys, const PsiWord& w) {
  RatMatrix out = RatMatrix::identity(sys.m());
  for (const auto& l : w.letters()) {
    const RatMatrix g = l.exponent > 0 ? psi_matrix(sys, l.i, l.j) : psi_matrix(sys, l.j, l.i);
    for (int e = 0; e < (l.exponent > 0 ? l.exponent : -l.exponent); ++e) out = out * g;
  }
  return out;
}

/// Normal form of psi_{i,j} (any order of i, j): t_i t_j t_i Per_{(i,j)}.
inline GroupElementNF psi_generator_nf(int m, int i, int j) {
  return {TWord{{i, j, i}}, Permutation::transposition(m, i, j)};
}

/// Normal form t_{k1}...t_{kr} Per_sigma of a psi-word.
inline GroupElementNF t_normal_form(const CoxeterSystem& sys, const PsiWord& w) {
  require_word_system(sys, "t_normal_form");
  GroupElementNF out = GroupElementNF::identity(sys.m());
  for (const auto& l : w.letters()) {
    const GroupElementNF g = l.exponent > 0 ? psi_generator_nf(sys.m(), l.i, l.j) : psi_generator_nf(sys.m(), l.j, l.i);
    for (int e = 0; e < (l.exponent > 0 ? l.exponent : -l.exponent); ++e) out = out * g;
  }
  return out;
}

/// Normal form of a bare t-word (identity permutation).
inline GroupElementNF t_word_nf(const CoxeterSystem& sys, const TWord& w) {
  require_word_system(sys, "t_word_nf");
  return {TWord::reduced(w.letters), Permutation::identity(sys.m())};
}

/// The psi-word w' with w.D contained in w'.Pi, built by peeling
/// w = (t_{i1} t_{i2} t_{i1}) t_{i1} t_{i3} ... = psi_{i1,i2} w_1 Per_{(i1,i2)} with
/// w_1 = t_{i2} t_{s(i3)} ... t_{s(is)}, s = (i1 i2), and recursing on w_1.
inline PsiWord psi_from_t(const CoxeterSystem& sys, const TWord& w) {
  require_word_system(sys, "psi_from_t");
  if (!w.is_reduced()) throw ParameterError("psi_from_t expects a freely reduced t-word");
  PsiWord out;
  TWord rest = w;
  while (rest.length() >= 2) {
    const int i1 = rest.letters[0];
    const int i2 = rest.letters[1];
    sys.check_index(i1);
    sys.check_index(i2);
    out.append(i1, i2, 1);
    const Permutation s = Permutation::transposition(sys.m(), i1, i2);
    TWord next;
    next.push_reduced(i2);
    for (std::size_t k = 2; k < rest.length(); ++k) next.push_reduced(s(rest.letters[k]));
    rest = std::move(next);
  }
  return out;
}

/// True iff the normal form of w starts with t_i t_j, where psi_{i,j} is the
/// first letter of w read with its sign.
inline bool prefix_check(const CoxeterSystem& sys, const PsiWord& w) {
  if (w.empty()) throw ParameterError("prefix_check needs a nonempty word");
  const GroupElementNF nf = t_normal_form(sys, w);
  const auto& first = w.letters().front();
  const int a = first.exponent > 0 ? first.i : first.j;
  const int b = first.exponent > 0 ? first.j : first.i;
  return nf.t_word.length() >= 2 && nf.t_word.letters[0] == a && nf.t_word.letters[1] == b;
}

struct FreeReport {
  std::uint64_t words_checked = 0;
  std::uint64_t collisions = 0;
};

/// All psi-generator pairs (i < j) in lexicographic order.
inline std::vector<std::pair<int, int>> psi_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.emplace_back(i, j);
  return out;
}

/// Visits every freely reduced psi-word of length 1..depth (letters are
/// generators or their inverses) in depth-first lexicographic order.
template <typename Visitor>
void for_each_reduced_psi_word(int m, int depth, Visitor&& visit) {
  const auto pairs = psi_pairs(m);
  // Letter code 2p is psi_pair^{+1}, 2p+1 is psi_pair^{-1}.
  const int alphabet = static_cast<int>(2 * pairs.size());
  std::vector<int> codes;
  auto rec = [&](auto&& self) -> void {
    if (!codes.empty()) {
      PsiWord w;
      for (int c : codes) w.append(pairs[c / 2].first, pairs[c / 2].second, c % 2 == 0 ? 1 : -1);
      visit(w);
    }
    if (static_cast<int>(codes.size()) == depth) return;
    for (int c = 0; c < alphabet; ++c) {
      if (!codes.empty() && (codes.back() ^ 1) == c) continue;
      codes.push_back(c);
      self(self);
      codes.pop_back();
    }
  };
  rec(rec);
}

/// Maps every freely reduced psi-word of length 1..depth to its normal form
/// and counts collisions (repeated normal forms, or a word equal to the identity).
inline FreeReport verify_free(const CoxeterSystem& sys, int depth, std::uint64_t budget = word_budget()) {
  require_word_system(sys, "verify_free");
  if (depth < 1) throw ParameterError("verify_free depth must be positive");
  const std::uint64_t k = static_cast<std::uint64_t>(sys.m()) * (sys.m() - 1);  // 2 * binom(m, 2)
  check_budget(count_reduced_words(k, static_cast<std::uint64_t>(depth), false), budget, "verify_free");
  FreeReport report;
  std::set<GroupElementNF> seen;
  seen.insert(GroupElementNF::identity(sys.m()));
  for_each_reduced_psi_word(sys.m(), depth, [&](const PsiWord& w) {
    ++report.words_checked;
    if (!seen.insert(t_normal_form(sys, w)).second) ++report.collisions;
  });
  return report;
}

/// Eigen-data of t_i t_j for n >= 3: the eigenvalue lambda > 1 and a
/// primitive eigenvector over Q(sqrt(d)).
struct EigenPair {
  QuadExt eigenvalue;
  Vec<QuadExt> eigenvector;
};

enum class EigenMarker {
  n1_finite_order,  // (t_i t_j)^3 = 1
  n2_unipotent,     // only eigenvalue 1, not diagonalizable
};

using EigenResult = std::variant<EigenPair, EigenMarker>;

/// Clears denominators, divides by the content of all rational and radical
/// parts, and flips the sign so that the coordinate sum is >= 0.
inline Vec<QuadExt> normalize_primitive(Vec<QuadExt> v) {
  BigInt l = 1;
  for (const auto& x : v) {
    l = lcm_int(l, denominator_of(x.rational_part()));
    l = lcm_int(l, denominator_of(x.radical_part()));
  }
  BigInt g = 0;
  for (const auto& x : v) {
    g = gcd_int(g, numerator_of(x.rational_part() * Rational(l)));
    g = gcd_int(g, numerator_of(x.radical_part() * Rational(l)));
  }
  if (g == 0) return v;
  const Rational scale(l, g);
  QuadExt sum(0);
  for (auto& x : v) {
    x = x * QuadExt(scale);
    sum += x;
  }
  if (sum.sign() < 0)
    for (auto& x : v) x = -x;
  return v;
}

/// The root lambda > 1 of x^2 - (n^2 - 2) x + 1, for n >= 3.
inline QuadExt lambda_for(int n) {
  if (n < 3) throw ParameterError("lambda > 1 exists only for n >= 3");
  return quad_roots(Rational(-(n * n - 2)), Rational(1)).first;
}

inline EigenResult eigen_pair(const CoxeterSystem& sys, int i, int j) {
  if (i == j) throw ParameterError("eigen_pair needs distinct indices");
  sys.check_index(i);
  sys.check_index(j);
  if (!sys.is_family()) throw ParameterError("eigen_pair requires a family system");
  if (sys.n() == 1) return EigenMarker::n1_finite_order;
  if (sys.n() == 2) return EigenMarker::n2_unipotent;
  const QuadExt lambda = lambda_for(sys.n());
  QuadMatrix shifted = (sys.t(i) * sys.t(j)).cast<QuadExt>();
  for (int k = 0; k < sys.m(); ++k) shifted(k, k) -= lambda;
  const auto basis = nullspace(shifted);
  if (basis.size() != 1) throw DomainError("eigenvalue lambda is not simple");
  return EigenPair{lambda, normalize_primitive(basis.front())};
}

/// (n+1)^m - (m+1)((n+1)^2 - 1), for n, m >= 3.
inline BigInt aut_codimension(int n, int m) {
  if (n < 3 || m < 3) throw ParameterError("aut_codimension needs n >= 3 and m >= 3");
  BigInt base = n + 1;
  BigInt p = 1;
  for (int k = 0; k < m; ++k) p *= base;
  return p - BigInt(m + 1) * (base * base - 1);
}

}  // namespace movcone
