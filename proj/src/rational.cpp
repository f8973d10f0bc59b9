#include "nr/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace nr {

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // cpp_rational's (num, den) constructor reduces to lowest terms.
  value_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(Rational::Raw{}, Rational::Backend(a.value_ / b.value_));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::string Rational::str() const {
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  const auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("Rational: empty integer");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
      throw std::invalid_argument("Rational: sign without digits");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rational: malformed integer '" +
                                    std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);  // cpp_int rejects a leading '+'
    return BigInt(std::string(s));
  };

  text = trim(text);
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  if (text.find('/', slash + 1) != std::string_view::npos)
    throw std::invalid_argument("Rational: more than one '/'");
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

std::string Rational::decimal(unsigned digits) const {
  BigInt n = numerator();
  const bool negative = n < 0;
  if (negative) n = -n;
  BigInt ten_d = 1;
  for (unsigned i = 0; i < digits; ++i) ten_d *= 10;
  const BigInt scaled = (n * ten_d) / denominator();  // truncated toward zero
  const BigInt whole = scaled / ten_d;
  std::string out = negative && !scaled.is_zero() ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string frac = BigInt(scaled % ten_d).str();
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace nr
