#include "nr/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nr {

namespace {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// |{1 <= x <= bound : gcd(x, q) = 1}| by inclusion-exclusion over q's
// distinct prime factors.
std::uint64_t coprime_count_up_to(std::uint64_t bound, std::uint64_t q) {
  if (bound == 0) return 0;
  const auto primes = distinct_prime_factors(q);
  std::uint64_t total = 0;
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t divisor = 1;
    bool negate = false;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        divisor *= primes[i];
        negate = !negate;
      }
    }
    const std::uint64_t term = bound / divisor;
    total += negate ? -term : term;
  }
  return total;
}

}  // namespace

void RationalEnumeration::grow_to(std::uint64_t limit) {
  limit = std::max(limit, kInitialLimit);
  if (limit > kMaxDenominator)
    throw std::length_error(
        "RationalEnumeration: denominator " + std::to_string(limit) +
        " exceeds the sieve cap 2^23; indices this deep are out of range");
  if (!phi_.empty() && limit <= sieve_limit()) return;
  std::uint64_t n = std::max<std::uint64_t>(phi_.empty() ? 0 : sieve_limit(),
                                            kInitialLimit);
  while (n < limit) n = std::min(n * 2, kMaxDenominator);

  phi_.assign(n + 1, 0);
  for (std::uint64_t i = 1; i <= n; ++i)
    phi_[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (phi_[i] == i) {  // i is prime
      for (std::uint64_t j = i; j <= n; j += i) phi_[j] -= phi_[j] / i;
    }
  }
  block_end_.assign(n + 1, 2);  // indices 0 and 1 hold the endpoints 0 and 1
  for (std::uint64_t q = 2; q <= n; ++q)
    block_end_[q] = block_end_[q - 1] + phi_[q];
}

Rational RationalEnumeration::value_at(std::uint64_t k) {
  if (k == 0) return Rational(0);
  if (k == 1) return Rational(1);
  while (block_end_.back() <= k) {
    if (sieve_limit() >= kMaxDenominator)
      throw std::length_error(
          "RationalEnumeration: index " + std::to_string(k) +
          " lies beyond the denominator sieve cap 2^23");
    grow_to(sieve_limit() * 2);
  }
  // Smallest q with block_end_[q] > k.
  const auto it =
      std::upper_bound(block_end_.begin() + 2, block_end_.end(), k);
  const std::uint64_t q =
      static_cast<std::uint64_t>(it - block_end_.begin());
  std::uint64_t offset = k - block_end_[q - 1];
  for (std::uint64_t p = 1; p < q; ++p) {
    if (std::gcd(p, q) == 1) {
      if (offset == 0) return Rational(BigInt(p), BigInt(q));
      --offset;
    }
  }
  throw std::logic_error("RationalEnumeration: block ranking out of sync");
}

std::uint64_t RationalEnumeration::index_of(const Rational& value) {
  if (value.sign() < 0 || value > Rational(1))
    throw std::domain_error("RationalEnumeration: " + value.str() +
                            " is outside [0,1]");
  if (value.is_zero()) return 0;
  if (value == Rational(1)) return 1;
  if (value.denominator() > kMaxDenominator)
    throw std::length_error(
        "RationalEnumeration: denominator of " + value.str() +
        " exceeds the sieve cap 2^23");
  const std::uint64_t q = value.denominator().convert_to<std::uint64_t>();
  const std::uint64_t p = value.numerator().convert_to<std::uint64_t>();
  grow_to(q);
  return block_end_[q - 1] + coprime_count_up_to(p - 1, q);
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo.sign() < 0)
    throw std::invalid_argument("simplest_rational_between: lo must be >= 0");
  if (!(lo < hi))
    throw std::invalid_argument("simplest_rational_between: need lo < hi");

  const BigInt lp = lo.numerator(), lq = lo.denominator();
  const BigInt hp = hi.numerator(), hq = hi.denominator();
  // Stern-Brocot envelope [a/b, c/d] around (lo, hi), with c/d = 1/0 as
  // +infinity. Same-direction runs are taken in one batch (the partial
  // quotients of the endpoints), so the walk is logarithmic, not linear.
  BigInt a = 0, b = 1, c = 1, d = 0;
  for (;;) {
    const BigInt mn = a + c, md = b + d;
    if (mn * lq <= lp * md) {
      // Mediant <= lo: batch right steps while (a + k c)/(b + k d) <= lo.
      const BigInt k = (lp * b - lq * a) / (lq * c - lp * d);
      a += k * c;
      b += k * d;
    } else if (mn * hq >= hp * md) {
      // Mediant >= hi: batch left steps while (k a + c)/(k b + d) >= hi.
      const BigInt k = (hq * c - hp * d) / (hp * b - hq * a);
      c += k * a;
      d += k * b;
    } else {
      return Rational(mn, md);  // mediants are already in lowest terms
    }
  }
}

}  // namespace nr
