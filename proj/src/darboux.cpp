#include "nr/darboux.hpp"

#include <algorithm>
#include <stdexcept>

namespace nr {

namespace {

constexpr unsigned kEvalApproxDigits = 30;
constexpr unsigned kEnclosureDigits = 40;

void require_unit_interval(const AlgebraicTag& t) {
  if (t.sign() < 0 || t > AlgebraicTag(Rational(1)))
    throw std::domain_error("BoundedFnOracle: " + t.str() +
                            " is outside [0,1]");
}

}  // namespace

BoundedFnOracle dirichlet_oracle() {
  BoundedFnOracle oracle;
  oracle.description = "dirichlet";
  oracle.eval = [](const AlgebraicTag& t) {
    require_unit_interval(t);
    return Rational(t.is_rational() ? 1 : 0);
  };
  oracle.sup_on = [](const Interval&) { return Rational(1); };
  oracle.inf_on = [](const Interval&) { return Rational(0); };
  return oracle;
}

BoundedFnOracle identity_oracle() {
  BoundedFnOracle oracle;
  oracle.description = "identity";
  oracle.eval = [](const AlgebraicTag& t) {
    require_unit_interval(t);
    return t.is_rational() ? t.rational_part() : t.approx(kEvalApproxDigits);
  };
  oracle.sup_on = [](const Interval& i) { return i.upper; };
  oracle.inf_on = [](const Interval& i) { return i.lower; };
  return oracle;
}

Rational upper_sum(const BoundedFnOracle& f, const Partition& p) {
  Rational total(0);
  for (std::size_t j = 0; j < p.size(); ++j)
    total += f.sup_on(p.interval(j)) * p.vol(j);
  return total;
}

Rational lower_sum(const BoundedFnOracle& f, const Partition& p) {
  Rational total(0);
  for (std::size_t j = 0; j < p.size(); ++j)
    total += f.inf_on(p.interval(j)) * p.vol(j);
  return total;
}

Rational darboux_gap(const BoundedFnOracle& f, const Partition& p) {
  return upper_sum(f, p) - lower_sum(f, p);
}

Rational oscillation_at(const BoundedFnOracle& f, const AlgebraicTag& x,
                        std::span<const Rational> radii) {
  if (radii.empty())
    throw std::invalid_argument("oscillation_at: need at least one radius");
  bool first = true;
  Rational best(0);
  for (const Rational& r : radii) {
    if (r.sign() <= 0)
      throw std::invalid_argument("oscillation_at: radii must be positive");
    // Rational enclosure of [x-r, x+r] ∩ [0,1]; closed so that nothing of
    // the true neighborhood is lost when the endpoints are irrational.
    const Rational lo =
        std::max(Rational(0), (x - AlgebraicTag(r)).enclosure(kEnclosureDigits).lo);
    const Rational hi =
        std::min(Rational(1), (x + AlgebraicTag(r)).enclosure(kEnclosureDigits).hi);
    const Interval window(lo, hi, Closure::closed);
    const Rational spread = f.sup_on(window) - f.inf_on(window);
    best = first ? spread : std::min(best, spread);
    first = false;
  }
  return best;
}

}  // namespace nr
