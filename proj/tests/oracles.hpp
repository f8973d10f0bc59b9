#pragma once

// Independent reference computations for the test suites. Deliberately naive
// — linear scans, bisection, explicit loops — and sharing nothing with the
// library code paths they check beyond the Rational value type.

#include "nr/algebraic_tag.hpp"
#include "nr/finsupp_vector.hpp"
#include "nr/rational.hpp"
#include "nr/rng.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace nr::oracles {

// The canonical enumeration order, generated sequentially: 0, 1, then for
// each denominator the coprime numerators ascending. Covers every rational
// of [0,1] with denominator <= max_den (and nothing else).
inline std::vector<Rational> enumeration_prefix(std::uint64_t max_den) {
  std::vector<Rational> order{Rational(0), Rational(1)};
  for (std::uint64_t q = 2; q <= max_den; ++q)
    for (std::uint64_t p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) order.emplace_back(BigInt(p), BigInt(q));
  return order;
}

// sqrt(2) bracketed by bisection on x^2 - 2, to width <= 10^-digits.
struct Sqrt2Bounds {
  Rational lo;
  Rational hi;
};
inline Sqrt2Bounds sqrt2_bisection(unsigned digits) {
  BigInt ten_d = 1;
  for (unsigned i = 0; i < digits; ++i) ten_d *= 10;
  const Rational tolerance(BigInt(1), ten_d);
  Rational lo(1), hi(2);
  const Rational two(2), half(1, 2);
  while (hi - lo > tolerance) {
    const Rational mid = half * (lo + hi);
    (mid * mid < two ? lo : hi) = mid;
  }
  return {lo, hi};
}

// First rational of the canonical order strictly inside (lo, hi), by scanning
// denominators one at a time. O(1/(hi-lo)); fine for test-sized intervals.
inline Rational first_rational_by_scan(const Rational& lo, const Rational& hi) {
  for (std::uint64_t q = 1;; ++q) {
    if (q == 1) {
      if (lo < Rational(0) && Rational(0) < hi) return Rational(0);
      if (lo < Rational(1) && Rational(1) < hi) return Rational(1);
      continue;
    }
    for (std::uint64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational candidate{BigInt(p), BigInt(q)};
      if (lo < candidate && candidate < hi) return candidate;
    }
  }
}

// A reproducible tag in [0,1]: rational (b = 0) or irrational (b != 0, both
// signs), with denominators small enough for the enumeration sieve. The
// sqrt2 coefficient is clamped so the value stays inside [0,1] exactly:
// |b*sqrt(2)| < 2|b| covers the slack on either side.
inline AlgebraicTag random_unit_tag(std::mt19937_64& rng) {
  constexpr std::uint64_t kGrid = 1u << 16;
  const std::uint64_t k = uniform_below(rng, kGrid + 1);
  const Rational a{BigInt(k), BigInt(kGrid)};
  switch (uniform_below(rng, 3)) {
    case 0:
      return AlgebraicTag(a);
    case 1: {  // positive sqrt2 part, needs room above a
      if (k == kGrid) return AlgebraicTag(a);
      const std::uint64_t j = 1 + uniform_below(rng, kGrid - k);
      return AlgebraicTag(a, Rational{BigInt(j), BigInt(2 * kGrid)});
    }
    default: {  // negative sqrt2 part, needs room below a
      if (k == 0) return AlgebraicTag(a);
      const std::uint64_t j = 1 + uniform_below(rng, k);
      return AlgebraicTag(a, Rational{-BigInt(j), BigInt(2 * kGrid)});
    }
  }
}

inline Rational random_small_rational(std::mt19937_64& rng) {
  const std::int64_t num =
      static_cast<std::int64_t>(uniform_below(rng, 199)) - 99;
  const std::int64_t den = 1 + static_cast<std::int64_t>(uniform_below(rng, 99));
  return Rational(num, den);
}

inline FinSuppVector random_finsupp(std::mt19937_64& rng) {
  FinSuppVector v;
  const std::uint64_t terms = uniform_below(rng, 8);
  for (std::uint64_t i = 0; i < terms; ++i) {
    const std::uint64_t index = uniform_below(rng, 1000);
    v = v + scale(random_small_rational(rng), FinSuppVector::indicator(index));
  }
  return v;
}

}  // namespace nr::oracles
