#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "movcone/errors.hpp"

namespace movcone {

using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<BigInt>;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const BigInt& z) { return z.sign(); }

inline BigInt abs_int(const BigInt& z) { return z < 0 ? BigInt(-z) : z; }

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline BigInt lcm_int(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos == s.size()) throw ParameterError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t k = pos; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParameterError("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(s.substr(pos));
  BigInt value(digits);
  return s[0] == '-' ? BigInt(-value) : value;
}

}  // namespace detail

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, text));
  const BigInt num = detail::parse_integer(text.substr(0, slash), text);
  const BigInt den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline BigInt parse_bigint(std::string_view text) { return detail::parse_integer(text, text); }

// Comma-separated list of rationals, e.g. "-1,4,5/2".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Integer square root floor(sqrt(z)) for z >= 0.
inline BigInt isqrt(const BigInt& z) {
  if (z < 0) throw DomainError("isqrt of a negative integer");
  return boost::multiprecision::sqrt(z);
}

inline bool is_perfect_square(const BigInt& z) {
  if (z < 0) return false;
  const BigInt r = isqrt(z);
  return r * r == z;
}

// Writes z = k^2 * d with d squarefree; returns {k, d}. z must be >= 0.
inline std::pair<BigInt, BigInt> squarefree_split(const BigInt& z) {
  if (z < 0) throw DomainError("squarefree_split of a negative integer");
  if (z == 0) return {BigInt(0), BigInt(0)};
  BigInt rest = z;
  BigInt k = 1;
  BigInt d = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int t = 0; t < e / 2; ++t) k *= p;
    if (e % 2 == 1) d *= p;
  }
  d *= rest;
  return {k, d};
}

// Content of an integer vector (gcd of all entries, 0 for the zero vector).
inline BigInt content(const IntVec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  return g;
}

// Divides by the positive content. The direction (sign) is kept.
inline IntVec primitive(IntVec v) {
  const BigInt g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

// Scales a rational vector by a positive factor to a primitive integer vector.
inline IntVec primitive_integer(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm_int(l, denominator_of(x));
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator_of(x) * (l / denominator_of(x)));
  return primitive(std::move(out));
}

inline std::vector<Rational> to_rational(const IntVec& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace movcone
