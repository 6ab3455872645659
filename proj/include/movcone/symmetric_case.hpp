#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "movcone/cone_atlas.hpp"

// The (n, m) = (2, 3) variety invariant under swapping the first two
// factors. Its birational group is <a, b> = Z/2 * Z with a = psi_{1,2}
// (now the automorphism Per_{(1,2)}) and b = psi_{1,3}.
namespace movcone::symmetric {

/// A freely reduced word in Z/2 * Z: syllables alternate between a and b^k, k != 0.
class SymWord {
 public:
  struct Syllable {
    bool is_a = false;
    int power = 1;  // exponent of b; ignored for a
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
  };

  void push_a() {
    if (!syllables_.empty() && syllables_.back().is_a)
      syllables_.pop_back();
    else
      syllables_.push_back({true, 1});
  }

  void push_b(int power) {
    if (power == 0) return;
    if (!syllables_.empty() && !syllables_.back().is_a) {
      syllables_.back().power += power;
      if (syllables_.back().power == 0) syllables_.pop_back();
      return;
    }
    syllables_.push_back({false, power});
  }

  void append(const SymWord& other) {
    for (const auto& s : other.syllables_) s.is_a ? push_a() : push_b(s.power);
  }

  const std::vector<Syllable>& syllables() const { return syllables_; }

  /// Word length in the generators a, b, b^{-1}.
  std::size_t length() const {
    std::size_t s = 0;
    for (const auto& x : syllables_) s += x.is_a ? 1 : static_cast<std::size_t>(x.power < 0 ? -x.power : x.power);
    return s;
  }

  std::size_t syllable_length() const { return syllables_.size(); }

  friend bool operator==(const SymWord&, const SymWord&) = default;
  friend auto operator<=>(const SymWord&, const SymWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// The general (n, m) = (2, 3) system whose psi-matrices b and psi_{2,3} reuse.
inline const CoxeterSystem& general_system() {
  static const CoxeterSystem sys = build_system(2, 3);
  return sys;
}

struct Generators {
  RatMatrix a;
  RatMatrix b;
};

inline Generators sym_generators() {
  return {perm_matrix(Permutation::transposition(3, 1, 2)), psi_matrix(general_system(), 1, 3)};
}

/// a b a == psi_{2,3}^* of the general case.
inline bool sym_relation_check() {
  const auto [a, b] = sym_generators();
  return a * b * a == psi_matrix(general_system(), 2, 3);
}

inline RatMatrix word_matrix(const SymWord& w) {
  const auto [a, b] = sym_generators();
  const RatMatrix b_inv = psi_matrix(general_system(), 3, 1);
  RatMatrix out = RatMatrix::identity(3);
  for (const auto& s : w.syllables()) {
    if (s.is_a) {
      out = out * a;
      continue;
    }
    const RatMatrix& g = s.power > 0 ? b : b_inv;
    for (int e = 0; e < (s.power > 0 ? s.power : -s.power); ++e) out = out * g;
  }
  return out;
}

inline IntVec apply_int(const RatMatrix& g, const IntVec& v) {
  const Vec<Rational> img = apply(g, v);
  IntVec out;
  for (const auto& x : img) {
    if (!is_integer(x)) throw DomainError("non-integral image");
    out.push_back(numerator_of(x));
  }
  return out;
}

/// A cone g.Pi; rays keep the cyclic order of Pi's rays.
struct SymCone {
  std::vector<IntVec> rays;
  SymWord word;
  friend bool operator==(const SymCone&, const SymCone&) = default;
};

/// Pi = Cone(H_3, phi_{0,1}^* H^1_0, H_2, phi_{0,3}^* H^3_0), in cyclic order.
inline SymCone sym_fundamental_domain() {
  const CoxeterSystem& sys = general_system();
  return {{IntVec{0, 0, 1}, integer_column(sys.t(1), 0), IntVec{0, 1, 0}, integer_column(sys.t(3), 2)}, SymWord{}};
}

inline SymCone translate(const SymWord& w, const SymCone& base) {
  const RatMatrix g = word_matrix(w);
  SymCone out{{}, w};
  for (const auto& r : base.rays) out.rays.push_back(primitive(apply_int(g, r)));
  return out;
}

/// Reduced words of length <= depth in a, b, b^{-1}, shortest first, then by
/// generator order a < b < b^{-1}.
inline std::vector<SymWord> sym_words(int depth, std::uint64_t budget = word_budget()) {
  if (depth < 0) throw ParameterError("depth must be >= 0");
  // 1 + 3 (2^depth - 1) words.
  std::uint64_t count = 1;
  std::uint64_t level = 3;
  for (int l = 1; l <= depth; ++l) {
    count += level;
    if (count > budget) break;
    level *= 2;
  }
  check_budget(count, budget, "sym_enumerate");
  std::vector<SymWord> out{SymWord{}};
  std::vector<std::pair<SymWord, int>> frontier{{SymWord{}, -1}};  // last letter: 0 = a, 1 = b, 2 = b^-1
  for (int l = 1; l <= depth; ++l) {
    std::vector<std::pair<SymWord, int>> next;
    for (const auto& [w, last] : frontier) {
      for (int g = 0; g < 3; ++g) {
        if ((last == 0 && g == 0) || (last == 1 && g == 2) || (last == 2 && g == 1)) continue;
        SymWord child = w;
        if (g == 0)
          child.push_a();
        else
          child.push_b(g == 1 ? 1 : -1);
        out.push_back(child);
        next.emplace_back(std::move(child), g);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Cones g.Pi for reduced words of length <= depth, deduplicated by ray set.
inline std::vector<SymCone> sym_enumerate(int depth, std::uint64_t budget = word_budget()) {
  const SymCone base = sym_fundamental_domain();
  std::vector<SymCone> out;
  std::set<std::vector<IntVec>> keys;
  for (const auto& w : sym_words(depth, budget)) {
    SymCone c = translate(w, base);
    if (keys.insert(canonical_key(c.rays)).second) out.push_back(std::move(c));
  }
  return out;
}

inline IntVec cross(const IntVec& u, const IntVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline BigInt dot_int(const IntVec& u, const IntVec& v) {
  BigInt s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

/// Closed membership in a convex 3-dimensional cone given by rays in cyclic order.
inline bool in_cone(const std::vector<IntVec>& cyclic_rays, const IntVec& p) {
  IntVec inner(3, BigInt(0));
  for (const auto& r : cyclic_rays)
    for (int k = 0; k < 3; ++k) inner[k] += r[k];
  for (std::size_t k = 0; k < cyclic_rays.size(); ++k) {
    IntVec normal = cross(cyclic_rays[k], cyclic_rays[(k + 1) % cyclic_rays.size()]);
    if (dot_int(normal, inner) < 0)
      for (auto& x : normal) x = -x;
    if (dot_int(normal, p) < 0) return false;
  }
  return true;
}

/// The normal form key of a SymWord's matrix.
inline std::vector<std::string> matrix_key(const RatMatrix& g) {
  std::vector<std::string> key;
  for (const auto& x : g.entries()) key.push_back(to_string(x));
  return key;
}

/// Counts repeated matrices among reduced words with at most max_syllables
/// syllables and b-powers 1 <= |k| <= max_power (identity included once).
inline std::uint64_t sym_collisions(int max_syllables, int max_power) {
  std::set<std::vector<std::string>> seen{matrix_key(RatMatrix::identity(3))};
  std::uint64_t collisions = 0;
  const auto [a, b] = sym_generators();
  const RatMatrix b_inv = psi_matrix(general_system(), 3, 1);
  std::vector<RatMatrix> b_powers;  // index 2(|k|-1) for b^k, 2(|k|-1)+1 for b^-k
  RatMatrix pos = RatMatrix::identity(3);
  RatMatrix neg = RatMatrix::identity(3);
  for (int k = 1; k <= max_power; ++k) {
    pos = pos * b;
    neg = neg * b_inv;
    b_powers.push_back(pos);
    b_powers.push_back(neg);
  }
  auto rec = [&](auto&& self, const RatMatrix& g, int syllables, int last_is_a) -> void {
    if (syllables == max_syllables) return;
    if (last_is_a != 1) {
      const RatMatrix h = g * a;
      if (!seen.insert(matrix_key(h)).second) ++collisions;
      self(self, h, syllables + 1, 1);
    }
    if (last_is_a != 0) {
      for (const auto& p : b_powers) {
        const RatMatrix h = g * p;
        if (!seen.insert(matrix_key(h)).second) ++collisions;
        self(self, h, syllables + 1, 0);
      }
    }
  };
  rec(rec, RatMatrix::identity(3), 0, -1);
  return collisions;
}

/// Integer line {x : coeffs . x = 0} tangent to the conic at p.
struct TangentLine {
  IntVec coefficients;
  friend bool operator==(const TangentLine&, const TangentLine&) = default;
};

inline TangentLine tangent_line(const DivisorClass& p) {
  const CoxeterSystem& sys = general_system();
  if (p.coords.size() != 3) throw ParameterError("tangent_line expects 3 coordinates");
  if (isotropy_value(sys, p.coords) != 0) throw DomainError("point is not on the conic");
  return {primitive_integer(sys.quadric() * p.coords)};
}

/// D_1 is twice the primitive intersection point of the tangent lines at H_3
/// and phi_{0,1}^* H^1_0: the class of the effective integral divisor found by
/// a section computation on the variety, which is not derivable from the cone.
inline constexpr int kD1Multiple = 2;

struct DClasses {
  IntVec d1;
  IntVec d2;
  friend bool operator==(const DClasses&, const DClasses&) = default;
};

inline IntVec phi01_vertex() { return integer_column(general_system().t(1), 0); }

inline DClasses d_classes() {
  const TangentLine l3 = tangent_line({{0, 0, 1}});
  const TangentLine l1 = tangent_line({to_rational(phi01_vertex())});
  IntVec dir = primitive(cross(l3.coefficients, l1.coefficients));
  if (dir[0] + dir[1] + dir[2] < 0)
    for (auto& x : dir) x = -x;
  IntVec d1 = dir;
  for (auto& x : d1) x *= kD1Multiple;
  return {d1, apply_int(sym_generators().a, d1)};
}

enum class PsefLayer { proven, expected };
enum class PsefKind { segment, glued_cone };

/// One piece of the expected pseudoeffective boundary. Segments are proven
/// boundary pieces (and their orbit); glued cones are the conjectural regions
/// between a D-vertex, its two tangent points and the conic arc joining them.
struct PsefPatch {
  PsefKind kind = PsefKind::segment;
  PsefLayer layer = PsefLayer::proven;
  std::vector<IntVec> vertices;  // a glued cone lists {D, tangent point, tangent point}
  SymWord word;
  friend bool operator==(const PsefPatch&, const PsefPatch&) = default;
};

inline std::vector<PsefPatch> psef_patches(int depth, std::uint64_t budget = word_budget()) {
  const DClasses dc = d_classes();
  const IntVec e3{0, 0, 1};
  const IntVec p1 = phi01_vertex();                      // (-1, 2, 2)
  const IntVec p2 = apply_int(sym_generators().a, p1);   // (2, -1, 2)
  const std::array<PsefPatch, 5> base{{
      {PsefKind::segment, PsefLayer::proven, {dc.d1, dc.d2}, {}},
      {PsefKind::segment, PsefLayer::proven, {dc.d1, p1}, {}},
      {PsefKind::segment, PsefLayer::proven, {dc.d2, p2}, {}},
      {PsefKind::glued_cone, PsefLayer::expected, {dc.d1, e3, p1}, {}},
      {PsefKind::glued_cone, PsefLayer::expected, {dc.d2, e3, p2}, {}},
  }};
  std::vector<PsefPatch> out;
  std::set<std::pair<int, std::vector<IntVec>>> keys;
  for (const auto& w : sym_words(depth, budget)) {
    const RatMatrix g = word_matrix(w);
    for (const auto& patch : base) {
      PsefPatch img{patch.kind, patch.layer, {}, w};
      for (const auto& v : patch.vertices) img.vertices.push_back(apply_int(g, v));
      std::vector<IntVec> key = img.vertices;
      std::sort(key.begin(), key.end());
      if (keys.insert({static_cast<int>(patch.kind), key}).second) out.push_back(std::move(img));
    }
  }
  return out;
}

}  // namespace movcone::symmetric
