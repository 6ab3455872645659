#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "json.hpp"
#include "movcone/cone_atlas.hpp"
#include "movcone/symmetric_case.hpp"

// Exact JSON encoding. Rationals are "p/q" strings, integers are JSON numbers
// when they fit in int64 and decimal strings otherwise, quadratic scalars are
// {"a", "b", "d"} objects and words are integer arrays.

namespace nlohmann {

template <>
struct adl_serializer<movcone::Rational> {
  static void to_json(json& j, const movcone::Rational& r) { j = movcone::to_string(r); }
  static void from_json(const json& j, movcone::Rational& r) {
    if (j.is_number_integer()) {
      r = movcone::Rational(j.get<std::int64_t>());
      return;
    }
    if (!j.is_string()) throw movcone::ParameterError("rational must be a \"p/q\" string");
    r = movcone::parse_rational(j.get<std::string>());
  }
};

template <>
struct adl_serializer<movcone::BigInt> {
  static void to_json(json& j, const movcone::BigInt& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
      j = static_cast<std::int64_t>(z);
    else
      j = z.str();
  }
  static void from_json(const json& j, movcone::BigInt& z) {
    if (j.is_number_integer()) {
      z = movcone::BigInt(j.get<std::int64_t>());
      return;
    }
    if (!j.is_string()) throw movcone::ParameterError("integer must be a number or a decimal string");
    z = movcone::parse_bigint(j.get<std::string>());
  }
};

template <typename T>
struct adl_serializer<movcone::Matrix<T>> {
  static void to_json(json& j, const movcone::Matrix<T>& a) {
    j = json::array();
    for (std::size_t r = 0; r < a.dim(); ++r) j.push_back(a.row(r));
  }
  static void from_json(const json& j, movcone::Matrix<T>& a) {
    const auto rows = j.get<std::vector<std::vector<T>>>();
    movcone::Matrix<T> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) throw movcone::ParameterError("matrix must be square");
      for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c];
    }
    a = std::move(out);
  }
};

}  // namespace nlohmann

namespace movcone {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline void to_json(json& j, const QuadExt& x) {
  j = {{"a", x.rational_part()}, {"b", x.radical_part()}, {"d", x.radicand()}};
}
inline void from_json(const json& j, QuadExt& x) {
  x = QuadExt(j.at("a").get<Rational>(), j.at("b").get<Rational>(), j.at("d").get<BigInt>());
}

inline void to_json(json& j, const Permutation& p) { j = p.images(); }
inline void from_json(const json& j, Permutation& p) { p = Permutation(j.get<std::vector<int>>()); }

inline void to_json(json& j, const TWord& w) { j = w.letters; }
inline void from_json(const json& j, TWord& w) { w.letters = j.get<std::vector<int>>(); }

// A psi-word is a list of [i, j, exponent] triples with i < j.
inline void to_json(json& j, const PsiWord& w) {
  j = json::array();
  for (const auto& l : w.letters()) j.push_back({l.i, l.j, l.exponent});
}
inline void from_json(const json& j, PsiWord& w) {
  w = PsiWord{};
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 3) throw ParameterError("psi letter must be [i, j, exponent]");
    w.append(l[0].get<int>(), l[1].get<int>(), l[2].get<int>());
  }
}

inline void to_json(json& j, const DivisorClass& d) { j = d.coords; }
inline void from_json(const json& j, DivisorClass& d) { d.coords = j.get<Vec<Rational>>(); }

inline void to_json(json& j, const Chamber& c) {
  j = {{"word", c.word}, {"rays", c.rays}};
  j["model"] = c.model ? json(*c.model) : json(nullptr);
}
inline void from_json(const json& j, Chamber& c) {
  c.word = j.at("word").get<TWord>();
  c.rays = j.at("rays").get<std::vector<IntVec>>();
  c.model = j.at("model").is_null() ? std::nullopt : std::optional<int>(j.at("model").get<int>());
}

inline void to_json(json& j, const BoundaryPatch& p) {
  j = {{"pair", {p.pair.first, p.pair.second}}, {"word", p.word}, {"apex", p.apex}, {"base_rays", p.base_rays}};
}
inline void from_json(const json& j, BoundaryPatch& p) {
  const auto pair = j.at("pair").get<std::vector<int>>();
  if (pair.size() != 2) throw ParameterError("pair must have two entries");
  p.pair = {pair[0], pair[1]};
  p.word = j.at("word").get<TWord>();
  p.apex = j.at("apex").get<Vec<QuadExt>>();
  p.base_rays = j.at("base_rays").get<std::vector<IntVec>>();
}

inline void to_json(json& j, const ClassificationResult& r) {
  j = {{"t_word", r.t_word},         {"psi_word", r.psi_word}, {"model_index", r.model_index},
       {"nef_coords", r.nef_coords}, {"marking", r.marking},   {"model_coords", r.model_coords}};
}
inline void from_json(const json& j, ClassificationResult& r) {
  r.t_word = j.at("t_word").get<TWord>();
  r.psi_word = j.at("psi_word").get<PsiWord>();
  r.model_index = j.at("model_index").get<int>();
  r.nef_coords = j.at("nef_coords").get<Vec<Rational>>();
  r.marking = j.at("marking").get<Permutation>();
  r.model_coords = j.at("model_coords").get<Vec<Rational>>();
}

inline json system_json(const CoxeterSystem& sys) {
  json j;
  j["n"] = sys.n();
  j["m"] = sys.m();
  j["gram"] = sys.gram();
  json ts = json::array();
  for (int i = 1; i <= sys.m(); ++i) ts.push_back(sys.t(i));
  j["t"] = ts;
  j["quadric"] = sys.has_quadric() ? json(sys.quadric()) : json(nullptr);
  j["lorentzian"] = sys.lorentzian();
  return j;
}

/// Wraps a payload as {"schema_version", "kind", "data"}.
inline json document(const std::string& kind, json data) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"data", std::move(data)}};
}

/// Checks the envelope and returns the payload.
inline const json& payload(const json& doc, const std::string& kind) {
  if (doc.at("schema_version").get<int>() != kSchemaVersion) throw ParameterError("unsupported schema_version");
  if (doc.at("kind").get<std::string>() != kind)
    throw ParameterError("expected a '" + kind + "' document, got '" + doc.at("kind").get<std::string>() + "'");
  return doc.at("data");
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace movcone

namespace movcone::symmetric {

// Syllables: "a" for the involution, a nonzero integer k for b^k.
inline void to_json(json& j, const SymWord& w) {
  j = json::array();
  for (const auto& s : w.syllables()) s.is_a ? j.push_back("a") : j.push_back(s.power);
}
inline void from_json(const json& j, SymWord& w) {
  w = SymWord{};
  for (const auto& s : j) {
    if (s.is_string() && s.get<std::string>() == "a")
      w.push_a();
    else if (s.is_number_integer() && s.get<int>() != 0)
      w.push_b(s.get<int>());
    else
      throw ParameterError("syllable must be \"a\" or a nonzero integer");
  }
}

inline void to_json(json& j, const SymCone& c) { j = {{"word", c.word}, {"rays", c.rays}}; }
inline void from_json(const json& j, SymCone& c) {
  c.word = j.at("word").get<SymWord>();
  c.rays = j.at("rays").get<std::vector<IntVec>>();
}

inline void to_json(json& j, const TangentLine& l) { j = l.coefficients; }
inline void from_json(const json& j, TangentLine& l) { l.coefficients = j.get<IntVec>(); }

inline void to_json(json& j, const DClasses& d) { j = {{"D1", d.d1}, {"D2", d.d2}}; }
inline void from_json(const json& j, DClasses& d) {
  d.d1 = j.at("D1").get<IntVec>();
  d.d2 = j.at("D2").get<IntVec>();
}

NLOHMANN_JSON_SERIALIZE_ENUM(PsefLayer, {{PsefLayer::proven, "proven"}, {PsefLayer::expected, "expected"}})
NLOHMANN_JSON_SERIALIZE_ENUM(PsefKind, {{PsefKind::segment, "segment"}, {PsefKind::glued_cone, "glued_cone"}})

inline void to_json(json& j, const PsefPatch& p) {
  j = {{"kind", p.kind}, {"layer", p.layer}, {"word", p.word}, {"vertices", p.vertices}};
}
inline void from_json(const json& j, PsefPatch& p) {
  p.kind = j.at("kind").get<PsefKind>();
  p.layer = j.at("layer").get<PsefLayer>();
  p.word = j.at("word").get<SymWord>();
  p.vertices = j.at("vertices").get<std::vector<IntVec>>();
}

}  // namespace movcone::symmetric
