#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nr {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction over arbitrary-precision integers. Canonical form is a class
// invariant: denominator > 0 and gcd(|numerator|, denominator) = 1. Every
// operation is exact; there is no floating-point fallback anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}
  Rational(const BigInt& n) : value_(n) {}
  Rational(BigInt num, BigInt den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  friend Rational operator-(const Rational& r) {
    return Rational(Raw{}, Backend(-r.value_));
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(Raw{}, Backend(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(Raw{}, Backend(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(Raw{}, Backend(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  // Canonical text form "p/q", e.g. "-3/2", "0/1". parse() also accepts the
  // integer shorthand "p".
  std::string str() const;
  static Rational parse(std::string_view text);

  // Truncated decimal expansion with exactly `digits` fraction digits; display
  // only, always an approximation unless the expansion terminates.
  std::string decimal(unsigned digits) const;

 private:
  using Backend = boost::multiprecision::cpp_rational;

  struct Raw {};  // value already canonical (result of backend arithmetic)
  Rational(Raw, Backend v) : value_(std::move(v)) {}

  Backend value_;
};

Rational abs(const Rational& r);

// The rationals as a one-dimensional normed space: |.| is the norm, rational
// multiplication is the scaling. Lets the generic Riemann-sum machinery run
// over real-valued paths as well.
inline Rational norm(const Rational& r) { return abs(r); }
inline Rational scale(const Rational& s, const Rational& v) { return s * v; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nr
