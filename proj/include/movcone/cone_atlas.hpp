#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "movcone/bir_group.hpp"

namespace movcone {

/// A class in N^1(X)_R written in the basis H_1, ..., H_m.
struct DivisorClass {
  Vec<Rational> coords;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// The cone w.Nef(X): m primitive integer rays (columns of the word matrix).
struct Chamber {
  std::vector<IntVec> rays;
  TWord word;
  std::optional<int> model;  // 0..m, the marked minimal model the chamber pulls back from
  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// One W-translate of a boundary cone {a v + sum_{k != i,j} a_k H_k}.
struct BoundaryPatch {
  Vec<QuadExt> apex;  // all zero for n = 2
  std::vector<IntVec> base_rays;
  TWord word;
  std::pair<int, int> pair;
  friend bool operator==(const BoundaryPatch&, const BoundaryPatch&) = default;
};

struct ClassificationResult {
  TWord t_word;
  PsiWord psi_word;
  int model_index = 0;
  Vec<Rational> nef_coords;  // d = T(t_word) * nef_coords, all >= 0
  Permutation marking;       // residual permutation after peeling psi_word
  Vec<Rational> model_coords;  // coordinates in the basis B_model of N^1(X_model)
  friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

/// Raised when the reduction walk does not reach the nef cone within the step cap.
class ClassificationError : public std::runtime_error {
 public:
  ClassificationError(std::size_t steps, Vec<Rational> last_iterate, TWord partial_word)
      : std::runtime_error("reduction did not reach the nef cone within " + std::to_string(steps) +
                           " steps; the class is outside the effective movable cone or too deep"),
        steps_(steps),
        last_iterate_(std::move(last_iterate)),
        partial_word_(std::move(partial_word)) {}

  std::string reason() const { return "step_cap_exhausted"; }
  std::size_t steps() const { return steps_; }
  const Vec<Rational>& last_iterate() const { return last_iterate_; }
  const TWord& partial_word() const { return partial_word_; }

 private:
  std::size_t steps_;
  Vec<Rational> last_iterate_;
  TWord partial_word_;
};

inline constexpr std::size_t kDefaultMaxSteps = 1000;

inline IntVec integer_column(const RatMatrix& a, std::size_t c) {
  IntVec out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (!is_integer(a(r, c))) throw DomainError("non-integral ray");
    out[r] = numerator_of(a(r, c));
  }
  return out;
}

inline std::vector<IntVec> chamber_rays(const RatMatrix& word_matrix) {
  std::vector<IntVec> rays;
  for (std::size_t c = 0; c < word_matrix.dim(); ++c) rays.push_back(primitive(integer_column(word_matrix, c)));
  return rays;
}

inline std::vector<IntVec> canonical_key(std::vector<IntVec> rays) {
  std::sort(rays.begin(), rays.end());
  return rays;
}

/// phi_{0,k}^* for k >= 1 and the identity for k = 0.
inline RatMatrix marking_matrix(const CoxeterSystem& sys, int model) {
  if (model == 0) return RatMatrix::identity(sys.m());
  return flop_pullback(sys, 0, model);
}

/// Peels w into psi_from_t(w) * t_k * Per_tau; returns {psi-word, k (0 if
/// absent), tau}.
struct ChamberMarking {
  PsiWord psi_word;
  int model = 0;
  Permutation perm;
};

inline ChamberMarking chamber_marking(const CoxeterSystem& sys, const TWord& w) {
  PsiWord psi = psi_from_t(sys, w);
  const GroupElementNF residual = t_normal_form(sys, psi).inverse() * t_word_nf(sys, w);
  if (residual.t_word.length() > 1) throw std::logic_error("psi_from_t left a residual t-word of length > 1");
  const int model = residual.t_word.empty() ? 0 : residual.t_word.letters.front();
  return {std::move(psi), model, residual.perm};
}

/// Nef(X_0) and the m cones t_i.Nef(X_0) = phi_{0,i}^* Nef(X_i).
inline std::vector<Chamber> fundamental_domain(const CoxeterSystem& sys) {
  std::vector<Chamber> out;
  out.push_back({chamber_rays(RatMatrix::identity(sys.m())), TWord{}, 0});
  for (int i = 1; i <= sys.m(); ++i) out.push_back({chamber_rays(sys.t(i)), TWord{{i}}, i});
  return out;
}

/// Vertices of the fundamental domain: the nef rays e_k and the flipped
/// columns v_i of the t_i, deduplicated.
inline std::vector<IntVec> fundamental_domain_vertices(const CoxeterSystem& sys) {
  std::set<IntVec> rays;
  for (const auto& ch : fundamental_domain(sys))
    for (const auto& r : ch.rays) rays.insert(r);
  return {rays.begin(), rays.end()};
}

/// One chamber per freely reduced t-word of length <= depth, in order of
/// length then lexicographic letters.
inline std::vector<Chamber> enumerate_chambers(const CoxeterSystem& sys, int depth,
                                               std::uint64_t budget = word_budget()) {
  require_word_system(sys, "enumerate_chambers");
  if (depth < 0) throw ParameterError("depth must be >= 0");
  const int m = sys.m();
  check_budget(count_reduced_words(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(depth), true), budget,
               "enumerate_chambers");
  std::vector<Chamber> out;
  std::set<std::vector<IntVec>> keys;
  auto emit = [&](const TWord& w, const RatMatrix& mat) {
    Chamber ch{chamber_rays(mat), w, chamber_marking(sys, w).model};
    if (keys.insert(canonical_key(ch.rays)).second) out.push_back(std::move(ch));
  };
  std::vector<std::pair<TWord, RatMatrix>> level{{TWord{}, RatMatrix::identity(m)}};
  emit(level.front().first, level.front().second);
  for (int len = 1; len <= depth; ++len) {
    std::vector<std::pair<TWord, RatMatrix>> next;
    for (const auto& [w, mat] : level) {
      for (int k = 1; k <= m; ++k) {
        if (!w.empty() && w.letters.back() == k) continue;
        TWord child = w;
        child.letters.push_back(k);
        RatMatrix child_mat = mat * sys.t(k);
        emit(child, child_mat);
        next.emplace_back(std::move(child), std::move(child_mat));
      }
    }
    level = std::move(next);
  }
  return out;
}

/// Reflects d back into the nef cone (most negative coordinate first,
/// smallest index on ties) and reads off the marked minimal model.
inline ClassificationResult classify(const CoxeterSystem& sys, const DivisorClass& d,
                                     std::size_t max_steps = kDefaultMaxSteps) {
  require_word_system(sys, "classify");
  const int m = sys.m();
  if (static_cast<int>(d.coords.size()) != m)
    throw ParameterError("class has " + std::to_string(d.coords.size()) + " coordinates, expected " +
                         std::to_string(m));
  if (std::all_of(d.coords.begin(), d.coords.end(), [](const Rational& x) { return x == 0; }))
    throw ParameterError("the zero class has no chamber");

  Vec<Rational> x = d.coords;
  TWord w;
  std::size_t steps = 0;
  while (true) {
    int pivot = -1;
    for (int k = 0; k < m; ++k)
      if (x[k] < 0 && (pivot < 0 || x[k] < x[pivot])) pivot = k;
    if (pivot < 0) break;
    if (steps == max_steps) throw ClassificationError(steps, x, w);
    x = sys.t(pivot + 1) * x;
    w.letters.push_back(pivot + 1);
    ++steps;
  }

  ChamberMarking marking = chamber_marking(sys, w);
  ClassificationResult res;
  res.t_word = std::move(w);
  res.psi_word = std::move(marking.psi_word);
  res.model_index = marking.model;
  res.marking = marking.perm;
  res.nef_coords = x;
  // t_k Per_tau = phi_{0,k}^* Per_{(1..k)} Per_tau.
  Vec<Rational> model_coords = perm_matrix(marking.perm) * x;
  if (res.model_index > 0) model_coords = perm_matrix(Permutation::consecutive_cycle(m, 1, res.model_index)) * model_coords;
  res.model_coords = std::move(model_coords);
  return res;
}

/// d = T(t_word) * nef_coords.
inline Vec<Rational> reconstruct_via_t(const CoxeterSystem& sys, const ClassificationResult& r) {
  return t_word_matrix(sys, r.t_word) * r.nef_coords;
}

/// d = Psi(psi_word) * phi_{0,model}^* * model_coords.
inline Vec<Rational> reconstruct_via_psi(const CoxeterSystem& sys, const ClassificationResult& r) {
  return psi_word_matrix(sys, r.psi_word) * (marking_matrix(sys, r.model_index) * r.model_coords);
}

template <typename T>
Vec<T> apply_word(const CoxeterSystem& sys, const TWord& w, Vec<T> v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = sys.t(*it).template cast<T>() * v;
  return v;
}

/// Boundary cones of the movable cone for every pair i < j and reduced
/// t-word of length <= depth, deduplicated by (sorted base rays, apex).
inline std::vector<BoundaryPatch> boundary_patches(const CoxeterSystem& sys, int depth,
                                                   std::uint64_t budget = word_budget()) {
  if (sys.is_family() && sys.n() == 1)
    throw ParameterError("the boundary of the Tits cone for n = 1 is not given by eigenvector cones");
  require_word_system(sys, "boundary_patches");
  if (depth < 0) throw ParameterError("depth must be >= 0");
  const int m = sys.m();
  const auto pairs = psi_pairs(m);
  check_budget(count_reduced_words(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(depth), true) *
                   pairs.size(),
               budget, "boundary_patches");

  std::vector<Vec<QuadExt>> base_apex;
  for (const auto& [i, j] : pairs) {
    const EigenResult e = eigen_pair(sys, i, j);
    if (const auto* p = std::get_if<EigenPair>(&e))
      base_apex.push_back(p->eigenvector);
    else
      base_apex.emplace_back(m, QuadExt(0));
  }

  std::vector<BoundaryPatch> out;
  std::set<std::pair<std::vector<IntVec>, std::vector<std::string>>> keys;
  std::vector<std::pair<TWord, RatMatrix>> level{{TWord{}, RatMatrix::identity(m)}};
  for (int len = 0; len <= depth; ++len) {
    for (const auto& [w, mat] : level) {
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        BoundaryPatch patch;
        patch.word = w;
        patch.pair = pairs[p];
        for (int k = 1; k <= m; ++k)
          if (k != i && k != j) patch.base_rays.push_back(primitive(integer_column(mat, k - 1)));
        Vec<QuadExt> apex = mat.cast<QuadExt>() * base_apex[p];
        patch.apex = std::all_of(apex.begin(), apex.end(), [](const QuadExt& x) { return x.is_zero(); })
                         ? apex
                         : normalize_primitive(std::move(apex));
        std::vector<std::string> apex_key;
        for (const auto& x : patch.apex) apex_key.push_back(to_string(x));
        if (keys.insert({canonical_key(patch.base_rays), apex_key}).second) out.push_back(std::move(patch));
      }
    }
    if (len == depth) break;
    std::vector<std::pair<TWord, RatMatrix>> next;
    for (const auto& [w, mat] : level) {
      for (int k = 1; k <= m; ++k) {
        if (!w.empty() && w.letters.back() == k) continue;
        TWord child = w;
        child.letters.push_back(k);
        next.emplace_back(std::move(child), mat * sys.t(k));
      }
    }
    level = std::move(next);
  }
  return out;
}

/// v / (v_1 + ... + v_m), the affine chart containing the nef rays.
template <typename T>
Vec<T> project_affine(const Vec<T>& v) {
  T s(0);
  for (const auto& x : v) s += x;
  if (s == T(0)) throw DomainError("direction lies at infinity of the affine chart (coordinate sum is 0)");
  Vec<T> out = v;
  for (auto& x : out) x /= s;
  return out;
}

/// v^T Qhat v with Qhat the normalized quadric matrix (positive on the nef interior).
template <typename T>
T isotropy_value(const CoxeterSystem& sys, const Vec<T>& v) {
  return quadratic_form(sys.quadric().template cast<T>(), v);
}

/// Squared Euclidean distance between two chart points.
template <typename T>
T chart_distance_sq(const Vec<T>& a, const Vec<T>& b) {
  T s(0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const T diff = a[k] - b[k];
    s += diff * diff;
  }
  return s;
}

}  // namespace movcone
