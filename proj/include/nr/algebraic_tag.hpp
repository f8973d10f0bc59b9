#pragma once

#include "nr/rational.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nr {

// Number of the form a + b*sqrt(2) with rational a, b.
//
// sqrt(2) is irrational, so (a, b) is uniquely determined by the value, the
// value is rational iff b = 0, and ordering is decidable by exact integer
// arithmetic alone. The set is dense in every interval and contains rational
// and irrational points everywhere, which is exactly what sample points of
// tagged partitions need: "is this tag rational?" has a computable answer.
// Decimal approximation exists for display only; nothing decides on it.
class AlgebraicTag {
 public:
  AlgebraicTag() = default;
  AlgebraicTag(Rational rational_value) : a_(std::move(rational_value)) {}
  AlgebraicTag(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static AlgebraicTag sqrt2() { return AlgebraicTag(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  // Exact sign of a + b*sqrt(2): when a and b disagree in sign the decision
  // reduces to comparing a^2 with 2 b^2.
  int sign() const;

  friend bool operator==(const AlgebraicTag& x, const AlgebraicTag& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const AlgebraicTag& x,
                                          const AlgebraicTag& y) {
    switch ((x - y).sign()) {
      case -1: return std::strong_ordering::less;
      case 0: return std::strong_ordering::equal;
      default: return std::strong_ordering::greater;
    }
  }

  friend AlgebraicTag operator-(const AlgebraicTag& x) {
    return AlgebraicTag(-x.a_, -x.b_);
  }
  friend AlgebraicTag operator+(const AlgebraicTag& x, const AlgebraicTag& y) {
    return AlgebraicTag(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend AlgebraicTag operator-(const AlgebraicTag& x, const AlgebraicTag& y) {
    return AlgebraicTag(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend AlgebraicTag scale(const Rational& s, const AlgebraicTag& x) {
    return AlgebraicTag(s * x.a_, s * x.b_);
  }

  // Rationals lo <= value <= hi with hi - lo <= 10^-digits; both bounds are
  // strict unless the value is rational (then lo == value == hi).
  struct Enclosure {
    Rational lo;
    Rational hi;
  };
  Enclosure enclosure(unsigned digits) const;

  // A rational within 10^-digits of the value; exact when b = 0. Display and
  // cross-checks only, never a decision procedure.
  Rational approx(unsigned digits) const { return enclosure(digits).lo; }

  // "p/q", "r/s*sqrt2" or "p/q + r/s*sqrt2" (zero terms omitted, "-" for a
  // negative sqrt2 coefficient). parse() accepts the same grammar.
  std::string str() const;
  static AlgebraicTag parse(std::string_view text);

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraicTag& t);

}  // namespace nr
