#pragma once

#include "nr/algebraic_tag.hpp"
#include "nr/partition.hpp"
#include "nr/rational.hpp"

#include <functional>
#include <span>
#include <string>

namespace nr {

// A bounded real-valued function on [0,1] packaged with exact pointwise
// evaluation and exact sup/inf answers on subintervals.
//
// The sup/inf come from the oracle, never from sampling: finitely many
// evaluations of a function like the rational indicator can never certify a
// supremum (rationals and irrationals are both dense), so the density facts
// are supplied as part of the function's definition.
struct BoundedFnOracle {
  std::function<Rational(const AlgebraicTag&)> eval;
  std::function<Rational(const Interval&)> sup_on;
  std::function<Rational(const Interval&)> inf_on;
  std::string description;
};

// Indicator of the rationals on [0,1] (the Dirichlet function): eval is 1 on
// rationals and 0 elsewhere; on every nondegenerate interval sup = 1 and
// inf = 0, because every such interval contains both a rational and an
// irrational point.
BoundedFnOracle dirichlet_oracle();

// f(t) = t on [0,1], the integrable comparator: sup/inf are the interval
// endpoints by monotonicity. eval is exact on rational tags and falls back
// to a high-precision rational approximation on irrational ones.
BoundedFnOracle identity_oracle();

Rational upper_sum(const BoundedFnOracle& f, const Partition& p);
Rational lower_sum(const BoundedFnOracle& f, const Partition& p);
Rational darboux_gap(const BoundedFnOracle& f, const Partition& p);

// min over the radii of sup - inf on a rational-endpoint interval enclosing
// [x-r, x+r] ∩ [0,1]. An upper estimate of the oscillation at x (the
// enclosure can only widen the neighborhood); exact for the shipped oracles.
Rational oscillation_at(const BoundedFnOracle& f, const AlgebraicTag& x,
                        std::span<const Rational> radii);

}  // namespace nr
