#pragma once

#include <cmath>
#include <string>

#include "movcone/rational.hpp"

namespace movcone {

/// An element a + b*sqrt(d) of a real quadratic field.
///
/// The radicand d is a context value: every element built inside one
/// computation carries the same d. Arithmetic between two elements whose
/// radical parts are both nonzero requires equal radicands and throws
/// DomainError otherwise. Elements with b = 0 are plain rationals and combine
/// with anything, adopting the other operand's radicand.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw DomainError("negative radicand");
    if (b_ != 0 && is_perfect_square(d_))
      throw DomainError("radicand " + d_.str() + " is a perfect square");
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const BigInt& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  /// Same radicand context, rational value.
  QuadExt with_value(Rational a) const { return QuadExt(std::move(a), Rational(0), d_); }

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }

  /// a^2 - b^2 d, the field norm.
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

  /// Exact sign of a + b sqrt(d).
  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 against b^2 d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
  }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  double to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
  }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y), Unchecked{});
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y), Unchecked{});
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const BigInt d = common_radicand(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d, Unchecked{});
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw DomainError("division by zero in quadratic field");
    const Rational n = y.norm();
    const QuadExt num = x * y.conjugate();
    return QuadExt(num.a_ / n, num.b_ / n, num.d_, Unchecked{});
  }

  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_ == 0 || x.d_ == y.d_;
  }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

 private:
  struct Unchecked {};
  QuadExt(Rational a, Rational b, BigInt d, Unchecked) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  static BigInt common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_)
      throw DomainError("mixed radicands " + x.d_.str() + " and " + y.d_.str());
    if (x.b_ != 0) return x.d_;
    if (y.b_ != 0) return y.d_;
    return x.d_ != 0 ? x.d_ : y.d_;
  }

  Rational a_{0};
  Rational b_{0};
  BigInt d_{0};
};

inline int sign(const QuadExt& x) { return x.sign(); }

inline std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  return to_string(x.rational_part()) + (x.radical_part() < 0 ? " - " : " + ") +
         to_string(x.radical_part() < 0 ? Rational(-x.radical_part()) : x.radical_part()) + "*sqrt(" +
         x.radicand().str() + ")";
}

}  // namespace movcone
