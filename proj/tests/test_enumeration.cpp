#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nr/enumeration.hpp"
#include "nr/rng.hpp"
#include "oracles.hpp"

#include <random>
#include <stdexcept>

using nr::BigInt;
using nr::Rational;
using nr::RationalEnumeration;
using nr::simplest_rational_between;

TEST_CASE("the order starts 0, 1, 1/2, 1/3, 2/3, 1/4, 3/4, ...") {
  RationalEnumeration e;
  const Rational head[] = {
      Rational(0),    Rational(1),    Rational(1, 2), Rational(1, 3),
      Rational(2, 3), Rational(1, 4), Rational(3, 4), Rational(1, 5),
      Rational(2, 5), Rational(3, 5), Rational(4, 5), Rational(1, 6),
      Rational(5, 6),
  };
  for (std::uint64_t k = 0; k < std::size(head); ++k)
    CHECK(e.value_at(k) == head[k]);

  CHECK(e.index_of(Rational(1, 2)) == 2);
  CHECK(e.index_of(Rational(2, 3)) == 4);
  // 2 + phi(2) + phi(3) + rank of 3 in {1,3} = 2 + 1 + 2 + 1 = 6.
  CHECK(e.index_of(Rational(3, 4)) == 6);
}

TEST_CASE("totient ranking matches the sequential oracle") {
  RationalEnumeration e;
  const auto order = nr::oracles::enumeration_prefix(60);
  for (std::uint64_t k = 0; k < order.size(); ++k) {
    CHECK(e.value_at(k) == order[k]);
    CHECK(e.index_of(order[k]) == k);
  }
}

TEST_CASE("round-trip identity over the first 10^4 indices") {
  RationalEnumeration e;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const Rational v = e.value_at(k);
    CHECK(v >= Rational(0));
    CHECK(v <= Rational(1));
    CHECK(e.index_of(v) == k);
  }
  // Spot value from the independent oracle (the prefix for denominators
  // <= 200 is longer than 10^4 entries).
  const auto order = nr::oracles::enumeration_prefix(200);
  REQUIRE(order.size() > 10000);
  CHECK(e.value_at(10000) == order[10000]);
}

TEST_CASE("index_of rejects values outside the unit interval") {
  RationalEnumeration e;
  CHECK_THROWS_AS(e.index_of(Rational(3, 2)), std::domain_error);
  CHECK_THROWS_AS(e.index_of(Rational(-1, 5)), std::domain_error);
}

TEST_CASE("sieve growth is on demand and capped") {
  RationalEnumeration e;
  const std::uint64_t before = e.sieve_limit();
  e.reserve_denominator(5000);
  CHECK(e.sieve_limit() >= 5000);
  CHECK(e.sieve_limit() >= before);
  // phi(5000) = 2000, and 4999 is the largest coprime residue, so the two
  // indices frame the whole denominator-5000 block.
  CHECK(e.index_of(Rational(4999, 5000)) ==
        e.index_of(Rational(1, 5000)) + 1999);
}

TEST_CASE("simplest_rational_between finds the minimal denominator") {
  CHECK(simplest_rational_between(Rational(1, 3), Rational(1, 2)) ==
        Rational(2, 5));
  CHECK(simplest_rational_between(Rational(0), Rational(1, 10)) ==
        Rational(1, 11));
  CHECK(simplest_rational_between(Rational(0), Rational(1)) == Rational(1, 2));
  CHECK(simplest_rational_between(Rational(3, 10), Rational(7, 10)) ==
        Rational(1, 2));
  // Tight interval around 1/2: the walk must stay logarithmic and exact.
  CHECK(simplest_rational_between(Rational(499999, 1000000),
                                  Rational(500001, 1000000)) ==
        Rational(1, 2));
  // Just above 1/2: candidates satisfy 2p - q = m with q in
  // (m 10^6/6, m 10^6/2); m = 1 gives the least denominator, 166667.
  CHECK(simplest_rational_between(Rational(500001, 1000000),
                                  Rational(500003, 1000000)) ==
        Rational(83334, 166667));
  CHECK_THROWS_AS(simplest_rational_between(Rational(1, 2), Rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(simplest_rational_between(Rational(-1, 2), Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("simplest_rational_between agrees with the canonical scan") {
  std::mt19937_64 rng(31337);
  RationalEnumeration e;
  for (int i = 0; i < 400; ++i) {
    // Random interval with endpoints on a modest grid, length >= 1/4096.
    const std::uint64_t den = 1u << (4 + nr::uniform_below(rng, 9));
    const std::uint64_t lo_num = nr::uniform_below(rng, den - 1);
    const std::uint64_t hi_num =
        lo_num + 1 + nr::uniform_below(rng, den - lo_num - 1);
    const Rational lo{BigInt(lo_num), BigInt(den)};
    const Rational hi{BigInt(hi_num), BigInt(den)};
    const Rational fast = simplest_rational_between(lo, hi);
    const Rational scan = nr::oracles::first_rational_by_scan(lo, hi);
    CHECK(fast == scan);
    // Minimal enumeration index among the open interval's rationals.
    CHECK(e.index_of(fast) == e.index_of(scan));
  }
}
