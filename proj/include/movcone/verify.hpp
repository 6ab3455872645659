#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "movcone/json_io.hpp"

// Property suites behind `movcone verify`. Each check records a short
// anchor naming the statement it exercises.

namespace movcone::verify {

struct Check {
  std::string name;
  std::string anchor;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  void add(std::string name, std::string anchor, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), std::move(anchor), ok, std::move(detail)});
  }

  void absorb(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

inline void to_json(json& j, const Check& c) {
  j = {{"name", c.name}, {"anchor", c.anchor}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
}

inline void to_json(json& j, const Report& r) {
  j = {{"suite", r.suite}, {"passed", r.passed()}, {"checks", r.checks}};
}

struct Grid {
  std::vector<int> ns{1, 2, 3, 4};
  std::vector<int> ms{2, 3, 4, 5};
};

inline std::string tag(int n, int m) { return "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"; }

/// (x - 1)^(m-2) (x^2 - (n^2 - 2) x + 1), constant term first.
inline Vec<Rational> expected_char_poly(int n, int m) {
  Vec<Rational> p{Rational(1), Rational(-(n * n - 2)), Rational(1)};
  for (int k = 0; k < m - 2; ++k) p = poly_mul(p, Vec<Rational>{Rational(-1), Rational(1)});
  return p;
}

inline bool char_poly_identity(const CoxeterSystem& sys) {
  for (int i = 1; i <= sys.m(); ++i)
    for (int j = 1; j <= sys.m(); ++j)
      if (i != j && char_poly(sys.t(i) * sys.t(j)) != expected_char_poly(sys.n(), sys.m())) return false;
  return true;
}

inline bool involutions(const CoxeterSystem& sys) {
  for (int i = 1; i <= sys.m(); ++i)
    if (!(sys.t(i) * sys.t(i)).is_identity() || sys.t(i) != sys.tau(i).transpose()) return false;
  return true;
}

inline bool swap_lemma_exhaustive(const CoxeterSystem& sys) {
  for (const auto& sigma : all_permutations(sys.m()))
    for (int i = 1; i <= sys.m(); ++i)
      if (!swap_lemma_check(sys, sigma, i)) return false;
  return true;
}

inline bool preserves(const RatMatrix& g, const RatMatrix& qhat) { return g.transpose() * qhat * g == qhat; }

inline bool quadric_invariance(const CoxeterSystem& sys) {
  const RatMatrix& q = sys.quadric();
  for (int i = 1; i <= sys.m(); ++i)
    if (!preserves(sys.t(i), q)) return false;
  for (const auto& sigma : all_permutations(sys.m()))
    if (!preserves(perm_matrix(sigma), q)) return false;
  for (int i = 1; i <= sys.m(); ++i)
    for (int j = 1; j <= sys.m(); ++j)
      if (i != j && !preserves(psi_matrix(sys, i, j), q)) return false;
  return true;
}

/// Order behaviour of t_i t_j: order 3 for n = 1, unipotent of infinite
/// order for n = 2, and a real eigenvalue lambda > 1 for n >= 3.
inline bool order_check(const CoxeterSystem& sys, int i, int j) {
  const RatMatrix a = sys.t(i) * sys.t(j);
  const int n = sys.n();
  if (n == 1) return power(a, 3).is_identity() && !a.is_identity();
  if (n == 2) {
    RatMatrix p = RatMatrix::identity(sys.m());
    for (int k = 1; k <= 12; ++k) {
      p = p * a;
      if (p.is_identity()) return false;
    }
    Vec<Rational> unipotent{Rational(1)};
    for (int k = 0; k < sys.m(); ++k) unipotent = poly_mul(unipotent, Vec<Rational>{Rational(-1), Rational(1)});
    // All eigenvalues are 1 and a != I, so the minimal polynomial has (x - 1)^2.
    return char_poly(a) == unipotent && !a.is_identity();
  }
  const QuadExt lambda = lambda_for(n);
  return (lambda - QuadExt(1)).sign() > 0;
}

inline Report identities(const Grid& grid = {}) {
  Report r{"identities", {}};
  for (int n : grid.ns) {
    for (int m : grid.ms) {
      const CoxeterSystem sys = build_system(n, m);
      const std::string t = tag(n, m);
      r.add("involutions " + t, "t_i^2 = I and t_i = tau_i^T", involutions(sys));
      r.add("char poly " + t, "char poly of t_i t_j", char_poly_identity(sys));
      bool orders = true;
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          if (i != j) orders = orders && order_check(sys, i, j);
      r.add("order " + t, "order of t_i t_j by n", orders);
      if (m <= 4) r.add("swap lemma " + t, "Per_sigma t_i = t_sigma(i) Per_sigma", swap_lemma_exhaustive(sys));
      r.add("gram eigen-data " + t, "Lorentzian eigen-data", gram_eigen_check(sys));
      if (2 - n * (m - 1) < 0) r.add("signature " + t, "Lorentzian signature (m-1, 1, 0)", sys.lorentzian());
      if (sys.has_quadric()) r.add("quadric invariance " + t, "g^T Qhat g = Qhat", quadric_invariance(sys));
    }
  }
  return r;
}

inline Report free_suite(int n, int m, int depth) {
  Report r{"free", {}};
  const CoxeterSystem sys = build_system(n, m);
  const FreeReport fr = verify_free(sys, depth);
  r.add("free product " + tag(n, m) + " depth " + std::to_string(depth), "psi generators are free",
        fr.collisions == 0,
        std::to_string(fr.words_checked) + " words, " + std::to_string(fr.collisions) + " collisions");
  return r;
}

/// Shared rays between two chambers.
inline std::size_t shared_rays(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  std::size_t s = 0;
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y) ++s;
  return s;
}

/// Disjoint interiors (an interior sample of each chamber classifies back to
/// its own word) and m - 1 shared rays with the parent chamber.
inline Report tiling_suite(int n, int m, int depth) {
  Report r{"tiling", {}};
  const CoxeterSystem sys = build_system(n, m);
  const auto chambers = enumerate_chambers(sys, depth);
  std::size_t bad_samples = 0;
  std::size_t bad_parents = 0;
  std::map<TWord, const Chamber*> by_word;
  for (const auto& ch : chambers) by_word[ch.word] = &ch;
  for (const auto& ch : chambers) {
    const Vec<Rational> sample = t_word_matrix(sys, ch.word) * Vec<Rational>(m, Rational(1));
    if (classify(sys, {sample}).t_word != ch.word) ++bad_samples;
    if (ch.word.empty()) continue;
    TWord parent = ch.word;
    parent.letters.pop_back();
    const auto it = by_word.find(parent);
    if (it == by_word.end() || shared_rays(it->second->rays, ch.rays) != static_cast<std::size_t>(m - 1))
      ++bad_parents;
  }
  const std::string t = tag(n, m) + " depth " + std::to_string(depth);
  r.add("interiors " + t, "chambers have disjoint interiors", bad_samples == 0,
        std::to_string(chambers.size()) + " chambers, " + std::to_string(bad_samples) + " misclassified");
  r.add("parent rays " + t, "adjacent chambers share a facet", bad_parents == 0);
  return r;
}

inline Report boundary_suite(int n, int m, int depth) {
  Report r{"boundary", {}};
  const CoxeterSystem sys = build_system(n, m);
  const auto patches = boundary_patches(sys, depth);
  bool isotropic = true;
  for (const auto& p : patches)
    if (!isotropy_value(sys, p.apex).is_zero()) isotropic = false;
  r.add("apex isotropy " + tag(n, m), "boundary apexes lie on the quadric", isotropic,
        std::to_string(patches.size()) + " patches");
  if (n >= 3) {
    bool eigen = true;
    for (const auto& [i, j] : psi_pairs(m)) {
      const auto e = std::get<EigenPair>(eigen_pair(sys, i, j));
      const Vec<QuadExt> image = (sys.t(i) * sys.t(j)).cast<QuadExt>() * e.eigenvector;
      for (std::size_t k = 0; k < image.size(); ++k) eigen = eigen && image[k] == e.eigenvalue * e.eigenvector[k];
    }
    r.add("eigenvectors " + tag(n, m), "t_i t_j v = lambda v", eigen);
  }
  return r;
}

inline Report symmetric_suite() {
  using namespace symmetric;
  Report r{"symmetric", {}};
  const auto [a, b] = sym_generators();
  r.add("a^2 = I", "a is an involution", (a * a).is_identity());
  r.add("relation", "a b a = psi_{2,3}", sym_relation_check());
  const RatMatrix& q = general_system().quadric();
  r.add("generators preserve Qhat", "g^T Qhat g = Qhat", preserves(a, q) && preserves(b, q));
  const DClasses dc = d_classes();
  r.add("D classes", "D1 = (-2,2,6), D2 = (2,-2,6)", dc.d1 == IntVec{-2, 2, 6} && dc.d2 == IntVec{2, -2, 6});
  const IntVec l3 = tangent_line({{0, 0, 1}}).coefficients;
  const IntVec l1 = tangent_line({to_rational(phi01_vertex())}).coefficients;
  const IntVec l2 = tangent_line({to_rational(apply_int(a, phi01_vertex()))}).coefficients;
  r.add("tangency", "D1, D2 lie on the tangent lines",
        dot_int(l3, dc.d1) == 0 && dot_int(l1, dc.d1) == 0 && dot_int(l3, dc.d2) == 0 && dot_int(l2, dc.d2) == 0);
  std::set<IntVec> halves;
  const SymCone pi = sym_fundamental_domain();
  for (const auto& v : pi.rays) halves.insert(v);
  for (const auto& v : pi.rays) halves.insert(primitive(apply_int(a, v)));
  const auto hex = fundamental_domain_vertices(general_system());
  r.add("hexagon", "Pi and a.Pi form the general hexagon", std::vector<IntVec>(halves.begin(), halves.end()) == hex);
  const std::uint64_t coll = sym_collisions(6, 2);
  r.add("free product Z/2 * Z", "no collisions to syllable depth 6", coll == 0,
        std::to_string(coll) + " collisions");
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "identities", "free", "tiling", "boundary", "symmetric"};
  return names;
}

/// Runs a named suite. n and m restrict the parametrized suites to one system.
inline Report run(const std::string& suite, std::optional<int> n = std::nullopt, std::optional<int> m = std::nullopt) {
  const auto pick = [&](std::vector<std::pair<int, int>> defaults) {
    if (n || m) return std::vector<std::pair<int, int>>{{n.value_or(2), m.value_or(3)}};
    return defaults;
  };
  if (suite == "identities") {
    Grid g;
    if (n) g.ns = {*n};
    if (m) g.ms = {*m};
    return identities(g);
  }
  if (suite == "free") {
    Report r{"free", {}};
    for (const auto& [a, b] : pick({{2, 3}, {3, 4}})) r.absorb(free_suite(a, b, a == 2 && b == 3 ? 4 : 3));
    return r;
  }
  if (suite == "tiling") {
    Report r{"tiling", {}};
    for (const auto& [a, b] : pick({{2, 3}, {3, 3}})) r.absorb(tiling_suite(a, b, 5));
    return r;
  }
  if (suite == "boundary") {
    Report r{"boundary", {}};
    for (const auto& [a, b] : pick({{2, 3}, {3, 3}, {3, 4}})) r.absorb(boundary_suite(a, b, 2));
    return r;
  }
  if (suite == "symmetric") return symmetric_suite();
  if (suite == "all") {
    Report r{"all", {}};
    for (const char* s : {"identities", "free", "tiling", "boundary", "symmetric"}) r.absorb(run(s, n, m));
    return r;
  }
  throw ParameterError("unknown suite '" + suite + "'");
}

}  // namespace movcone::verify
