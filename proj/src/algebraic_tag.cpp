#include "nr/algebraic_tag.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace nr {

namespace {

// Number of decimal digits of x > 0.
unsigned decimal_digits(const BigInt& x) {
  return static_cast<unsigned>(x.str().size());
}

}  // namespace

int AlgebraicTag::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| against sqrt(2)|b|, i.e. a^2 against 2 b^2. Equality
  // would make sqrt(2) rational.
  const Rational lhs = a_ * a_;
  const Rational rhs = Rational(2) * b_ * b_;
  if (lhs == rhs)
    throw std::logic_error("AlgebraicTag: a^2 == 2 b^2 with a, b nonzero");
  return lhs > rhs ? sa : -sa;
}

AlgebraicTag::Enclosure AlgebraicTag::enclosure(unsigned digits) const {
  if (digits == 0)
    throw std::invalid_argument("AlgebraicTag: precision must be >= 1");
  if (is_rational()) return {a_, a_};

  // 10^m > |b| * 10^digits, so |b| / 10^m < 10^-digits encloses b*sqrt(2)
  // once sqrt(2) itself is pinned between s/10^m and (s+1)/10^m.
  const Rational abs_b = abs(b_);
  const BigInt b_ceil =
      (abs_b.numerator() + abs_b.denominator() - 1) / abs_b.denominator();
  const unsigned m = digits + decimal_digits(b_ceil) + 1;
  BigInt ten_m = 1;
  for (unsigned i = 0; i < m; ++i) ten_m *= 10;
  // 2 * 10^(2m) is never a perfect square, so both bounds are strict.
  const BigInt s = sqrt(BigInt(2 * ten_m * ten_m));
  const Rational sqrt2_lo(s, ten_m);
  const Rational sqrt2_hi(s + 1, ten_m);
  if (b_.sign() > 0) return {a_ + b_ * sqrt2_lo, a_ + b_ * sqrt2_hi};
  return {a_ + b_ * sqrt2_hi, a_ + b_ * sqrt2_lo};
}

std::string AlgebraicTag::str() const {
  if (is_rational()) return a_.str();
  const std::string sqrt_term = abs(b_).str() + "*sqrt2";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + sqrt_term;
  return a_.str() + (b_.sign() < 0 ? " - " : " + ") + sqrt_term;
}

AlgebraicTag AlgebraicTag::parse(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t') compact.push_back(c);
  if (compact.empty()) throw std::invalid_argument("AlgebraicTag: empty text");

  const std::string suffix = "*sqrt2";
  const std::size_t pos = compact.find(suffix);
  if (pos == std::string::npos) {
    if (compact.find("sqrt2") != std::string::npos)
      throw std::invalid_argument(
          "AlgebraicTag: sqrt2 requires an explicit coefficient 'r/s*sqrt2'");
    return AlgebraicTag(Rational::parse(compact));
  }
  if (pos + suffix.size() != compact.size())
    throw std::invalid_argument("AlgebraicTag: '*sqrt2' must end the text");

  const std::string head = compact.substr(0, pos);
  // Split "A+B" / "A-B" at the last sign that follows a digit; a leading sign
  // or the sign of B itself never qualifies.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] >= '0' &&
        head[i - 1] <= '9') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    return AlgebraicTag(Rational(0), Rational::parse(head));
  const Rational a = Rational::parse(head.substr(0, split));
  Rational b = Rational::parse(head.substr(split + 1));
  if (head[split] == '-') b = -b;
  return AlgebraicTag(a, b);
}

std::ostream& operator<<(std::ostream& os, const AlgebraicTag& t) {
  return os << t.str();
}

}  // namespace nr
