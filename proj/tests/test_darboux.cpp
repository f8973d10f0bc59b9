#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nr/darboux.hpp"
#include "nr/rng.hpp"
#include "oracles.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using nr::AlgebraicTag;
using nr::BoundedFnOracle;
using nr::Closure;
using nr::Interval;
using nr::Partition;
using nr::Rational;
using nr::TagStrategy;

TEST_CASE("dirichlet oracle: pointwise values and interval bounds") {
  const BoundedFnOracle f = nr::dirichlet_oracle();
  CHECK(f.eval(AlgebraicTag(Rational(1, 7))) == Rational(1));
  CHECK(f.eval(AlgebraicTag(Rational(0), Rational(1, 2))) == Rational(0));
  CHECK_THROWS_AS(f.eval(AlgebraicTag(Rational(3, 2))), std::domain_error);

  const Interval i(Rational(1, 3), Rational(1, 2), Closure::half_open);
  CHECK(f.sup_on(i) == Rational(1));
  CHECK(f.inf_on(i) == Rational(0));
}

TEST_CASE("identity oracle: monotone bounds, exact rational evaluation") {
  const BoundedFnOracle f = nr::identity_oracle();
  CHECK(f.sup_on(Interval(Rational(0), Rational(1, 2), Closure::half_open)) ==
        Rational(1, 2));
  CHECK(f.inf_on(Interval(Rational(1, 4), Rational(1), Closure::closed)) ==
        Rational(1, 4));
  CHECK(f.eval(AlgebraicTag(Rational(2, 5))) == Rational(2, 5));
  // Irrational points evaluate through the high-precision approximation.
  const AlgebraicTag point(Rational(1, 2), Rational(1, 8));
  const Rational value = f.eval(point);
  CHECK(value > Rational(1, 2));
  CHECK(value < Rational(1));
}

TEST_CASE("darboux sums of the dirichlet function never close the gap") {
  const BoundedFnOracle f = nr::dirichlet_oracle();
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 60; ++i) {
    const Partition p = Partition::random(Rational(0), Rational(1),
                                          1 + nr::uniform_below(rng, 128),
                                          rng());
    CHECK(nr::lower_sum(f, p) == Rational(0));
    CHECK(nr::upper_sum(f, p) == Rational(1));
    CHECK(nr::darboux_gap(f, p) == Rational(1));
  }
  CHECK(nr::darboux_gap(
            f, Partition::from_breakpoints({Rational(0), Rational(1)})) ==
        Rational(1));
}

TEST_CASE("darboux sums of the identity detect integrability") {
  const BoundedFnOracle f = nr::identity_oracle();

  const Partition four = Partition::uniform(Rational(0), Rational(1), 4);
  // Explicit series: sums of x_j * vol and of x_{j-1} * vol.
  Rational upper_ref(0), lower_ref(0);
  for (std::size_t j = 0; j < four.size(); ++j) {
    upper_ref += four.breakpoints()[j + 1] * four.vol(j);
    lower_ref += four.breakpoints()[j] * four.vol(j);
  }
  CHECK(upper_ref == Rational(5, 8));
  CHECK(lower_ref == Rational(3, 8));
  CHECK(nr::upper_sum(f, four) == upper_ref);
  CHECK(nr::lower_sum(f, four) == lower_ref);

  CHECK(nr::upper_sum(
            f, Partition::from_breakpoints({Rational(0), Rational(1)})) ==
        Rational(1));

  for (const std::uint64_t n : {1ull, 2ull, 7ull, 64ull, 333ull}) {
    const Partition p = Partition::uniform(Rational(0), Rational(1), n);
    const long long nn = static_cast<long long>(n);
    CHECK(nr::upper_sum(f, p) == Rational(nn + 1, 2 * nn));
    CHECK(nr::lower_sum(f, p) == Rational(nn - 1, 2 * nn));
    CHECK(nr::darboux_gap(f, p) == Rational(1, nn));
  }
}

TEST_CASE("lower sums never exceed upper sums") {
  std::mt19937_64 rng(31415);
  for (const auto& f : {nr::dirichlet_oracle(), nr::identity_oracle()}) {
    for (int i = 0; i < 40; ++i) {
      const Partition p = Partition::random(Rational(0), Rational(1),
                                            1 + nr::uniform_below(rng, 64),
                                            rng());
      CHECK(nr::lower_sum(f, p) <= nr::upper_sum(f, p));
    }
  }
}

TEST_CASE("refinement tightens darboux sums and never widens the gap") {
  const BoundedFnOracle f = nr::identity_oracle();
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 40; ++i) {
    const Partition p = Partition::random(Rational(0), Rational(1),
                                          1 + nr::uniform_below(rng, 24),
                                          rng());
    const Partition q = Partition::random(Rational(0), Rational(1),
                                          1 + nr::uniform_below(rng, 24),
                                          rng());
    const Partition r = common_refinement(p, q);
    CHECK(nr::upper_sum(f, r) <= nr::upper_sum(f, p));
    CHECK(nr::lower_sum(f, r) >= nr::lower_sum(f, p));
    CHECK(nr::darboux_gap(f, r) <= nr::darboux_gap(f, p));
  }
}

TEST_CASE("oscillation of the dirichlet function is 1 everywhere") {
  const BoundedFnOracle f = nr::dirichlet_oracle();
  const std::vector<Rational> radii = {Rational(1, 10), Rational(1, 100)};
  CHECK(nr::oscillation_at(f, AlgebraicTag(Rational(1, 2)), radii) ==
        Rational(1));
  CHECK(nr::oscillation_at(f, AlgebraicTag(Rational(0), Rational(1, 2)),
                           radii) == Rational(1));
  CHECK(nr::oscillation_at(f, AlgebraicTag(Rational(0)), radii) == Rational(1));
  CHECK(nr::oscillation_at(f, AlgebraicTag(Rational(1)), radii) == Rational(1));
}

TEST_CASE("oscillation of the identity shrinks with the radius") {
  const BoundedFnOracle f = nr::identity_oracle();
  const std::vector<Rational> tenth = {Rational(1, 10)};
  // Window [2/5, 3/5]: spread 1/5.
  CHECK(nr::oscillation_at(f, AlgebraicTag(Rational(1, 2)), tenth) ==
        Rational(2, 10));
  const std::vector<Rational> both = {Rational(1, 10), Rational(1, 50)};
  CHECK(nr::oscillation_at(f, AlgebraicTag(Rational(1, 2)), both) ==
        Rational(2, 50));

  CHECK_THROWS_AS(nr::oscillation_at(f, AlgebraicTag(Rational(1, 2)), {}),
                  std::invalid_argument);
  const std::vector<Rational> bad = {Rational(0)};
  CHECK_THROWS_AS(nr::oscillation_at(f, AlgebraicTag(Rational(1, 2)), bad),
                  std::invalid_argument);
}

TEST_CASE("oracle soundness: inf <= eval <= sup on random interval points") {
  std::mt19937_64 rng(16180);
  for (const auto& f : {nr::dirichlet_oracle(), nr::identity_oracle()}) {
    for (int i = 0; i < 500; ++i) {
      const Partition p = Partition::random(Rational(0), Rational(1),
                                            1 + nr::uniform_below(rng, 16),
                                            rng());
      const auto tags = tag_with_strategy(
          p, (i % 2) ? TagStrategy::mixed_random : TagStrategy::low_index_rational,
          rng());
      for (std::size_t j = 0; j < p.size(); ++j) {
        const Interval window = p.interval(j);
        const Rational value = f.eval(tags.tags()[j]);
        CHECK(f.inf_on(window) <= value);
        CHECK(value <= f.sup_on(window));
      }
    }
  }
}
