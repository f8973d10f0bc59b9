#pragma once

#include "nr/rational.hpp"

#include <cstdint>
#include <vector>

namespace nr {

// The canonical bijection between the naturals and the rationals of [0,1]:
//
//   index 0 -> 0,  index 1 -> 1,  then for each denominator q = 2, 3, 4, ...
//   the reduced fractions p/q with 1 <= p < q, gcd(p, q) = 1, ascending in p:
//   1/2, 1/3, 2/3, 1/4, 3/4, 1/5, 2/5, 3/5, 4/5, 1/6, 5/6, ...
//
// Ranking uses totient prefix sums: the denominator-q block starts at
// 2 + sum_{d=2}^{q-1} phi(d), and the offset inside the block is the number
// of smaller coprime numerators (inclusion-exclusion over q's prime factors).
//
// The totient sieve is the only state and grows on demand by doubling. It is
// not internally synchronized: call reserve_denominator() up front before
// sharing an instance across threads; queries are pure given the memo.
class RationalEnumeration {
 public:
  RationalEnumeration() { grow_to(kInitialLimit); }

  // k-th rational of the order above.
  Rational value_at(std::uint64_t k);

  // Inverse of value_at; the argument must lie in [0,1] (throws
  // std::domain_error otherwise; canonical form is the Rational invariant).
  std::uint64_t index_of(const Rational& value);

  void reserve_denominator(std::uint64_t max_denominator) {
    grow_to(max_denominator);
  }
  std::uint64_t sieve_limit() const { return phi_.size() - 1; }

  // Sieve memory is O(denominator); denominators beyond this raise
  // std::length_error rather than exhausting memory.
  static constexpr std::uint64_t kMaxDenominator = 1ull << 23;

 private:
  static constexpr std::uint64_t kInitialLimit = 1u << 10;

  void grow_to(std::uint64_t limit);

  std::vector<std::uint32_t> phi_;       // phi_[d] = Euler totient of d
  std::vector<std::uint64_t> block_end_; // block_end_[q] = 2 + sum_{d<=q} phi(d)
};

// The fraction with the smallest denominator strictly inside (lo, hi),
// 0 <= lo < hi — unique, and therefore also the rational of smallest
// enumeration index in the open interval. Accelerated Stern-Brocot descent;
// cost is logarithmic in the result's denominator, so it stays cheap even on
// very short intervals where scanning denominators one by one would not.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace nr
