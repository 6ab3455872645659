#pragma once

#include <compare>
#include <string>
#include <vector>

#include "movcone/permutation.hpp"

namespace movcone {

/// A word t_{k1} t_{k2} ... in the involutions t_i, letters 1-based.
struct TWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  /// Appends a letter, cancelling it against an equal last letter.
  void push_reduced(int k) {
    if (!letters.empty() && letters.back() == k)
      letters.pop_back();
    else
      letters.push_back(k);
  }

  bool is_reduced() const {
    for (std::size_t k = 1; k < letters.size(); ++k)
      if (letters[k] == letters[k - 1]) return false;
    return true;
  }

  static TWord reduced(const std::vector<int>& letters) {
    TWord w;
    for (int k : letters) w.push_reduced(k);
    return w;
  }

  friend bool operator==(const TWord&, const TWord&) = default;
  friend auto operator<=>(const TWord&, const TWord&) = default;
};

/// One letter psi_{i,j}^exponent with i < j.
struct PsiLetter {
  int i = 0;
  int j = 0;
  int exponent = 0;
  friend bool operator==(const PsiLetter&, const PsiLetter&) = default;
  friend auto operator<=>(const PsiLetter&, const PsiLetter&) = default;
};

/// A freely reduced word in the generators psi_{i,j}.
///
/// Only pairs with i < j are stored; psi_{j,i} is psi_{i,j}^{-1}. Adjacent
/// letters with the same pair are merged and zero exponents dropped.
class PsiWord {
 public:
  PsiWord() = default;

  /// Appends psi_{i,j}^exponent (any order of i, j) and re-reduces.
  void append(int i, int j, int exponent = 1) {
    if (i == j) throw ParameterError("psi generator needs distinct indices");
    if (i > j) {
      std::swap(i, j);
      exponent = -exponent;
    }
    if (exponent == 0) return;
    if (!letters_.empty() && letters_.back().i == i && letters_.back().j == j) {
      letters_.back().exponent += exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
      return;
    }
    letters_.push_back({i, j, exponent});
  }

  void append(const PsiWord& other) {
    for (const auto& l : other.letters_) append(l.i, l.j, l.exponent);
  }

  PsiWord inverse() const {
    PsiWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.append(it->i, it->j, -it->exponent);
    return out;
  }

  static PsiWord generator(int i, int j, int exponent = 1) {
    PsiWord w;
    w.append(i, j, exponent);
    return w;
  }

  const std::vector<PsiLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// Number of letters counted with multiplicity |exponent|.
  std::size_t length() const {
    std::size_t s = 0;
    for (const auto& l : letters_) s += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
    return s;
  }

  friend PsiWord operator*(PsiWord a, const PsiWord& b) {
    a.append(b);
    return a;
  }

  friend bool operator==(const PsiWord&, const PsiWord&) = default;

 private:
  std::vector<PsiLetter> letters_;
};

/// t_{k1} ... t_{kr} * Per_sigma with the t-word freely reduced. For n >= 2
/// this factorization of a group element is unique.
struct GroupElementNF {
  TWord t_word;
  Permutation perm;

  static GroupElementNF identity(int m) { return {TWord{}, Permutation::identity(m)}; }

  /// Per_sigma t_k = t_{sigma(k)} Per_sigma moves the permutation to the right.
  friend GroupElementNF operator*(const GroupElementNF& a, const GroupElementNF& b) {
    GroupElementNF out{a.t_word, a.perm * b.perm};
    for (int k : b.t_word.letters) out.t_word.push_reduced(a.perm(k));
    return out;
  }

  GroupElementNF inverse() const {
    const Permutation inv = perm.inverse();
    GroupElementNF out{TWord{}, inv};
    for (auto it = t_word.letters.rbegin(); it != t_word.letters.rend(); ++it) out.t_word.push_reduced(inv(*it));
    return out;
  }

  bool is_identity() const { return t_word.empty() && perm.is_identity(); }

  friend bool operator==(const GroupElementNF&, const GroupElementNF&) = default;
  friend auto operator<=>(const GroupElementNF&, const GroupElementNF&) = default;
};

}  // namespace movcone
