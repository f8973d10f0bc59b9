#include "nr/path.hpp"

#include "nr/normed.hpp"
#include "nr/rng.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace nr {

namespace {

void require_unit_interval(const AlgebraicTag& t) {
  if (t.sign() < 0 || t > AlgebraicTag(Rational(1)))
    throw std::domain_error("CounterexamplePath: " + t.str() +
                            " is outside [0,1]");
}

void require_unit_partition(const TaggedPartition& tp) {
  if (!tp.partition().lower().is_zero() ||
      tp.partition().upper() != Rational(1))
    throw std::invalid_argument(
        "riemann_sum: tagged partition must cover [0,1]");
}

}  // namespace

FinSuppVector CounterexamplePath::operator()(const AlgebraicTag& t) const {
  require_unit_interval(t);
  if (!t.is_rational()) return FinSuppVector{};
  return FinSuppVector::indicator(enumeration_->index_of(t.rational_part()));
}

Rational CounterexamplePath::norm_at(const AlgebraicTag& t) const {
  require_unit_interval(t);
  return Rational(t.is_rational() ? 1 : 0);
}

Rational closed_form_sum_norm(const TaggedPartition& tp) {
  Rational best(0);
  const Partition& p = tp.partition();
  for (std::size_t j = 0; j < p.size(); ++j)
    if (tp.tags()[j].is_rational()) best = std::max(best, p.vol(j));
  return best;
}

RiemannSumReport riemann_sum(const CounterexamplePath& path,
                             const TaggedPartition& tp) {
  require_unit_partition(tp);
  RiemannSumReport report{tp, riemann_sum_value(tp, path), Rational(0),
                          closed_form_sum_norm(tp), tp.diameter()};
  report.sum_norm = sup_norm(report.sum);
  if (report.sum_norm != report.closed_form_norm)
    throw std::logic_error(
        "riemann_sum: sparse sum norm " + report.sum_norm.str() +
        " disagrees with the closed form " + report.closed_form_norm.str());
  if (report.sum_norm > report.diameter)
    throw std::logic_error("riemann_sum: sum norm " + report.sum_norm.str() +
                           " exceeds the diameter " + report.diameter.str());
  return report;
}

std::string_view partition_family_name(PartitionFamily f) {
  switch (f) {
    case PartitionFamily::uniform: return "uniform";
    case PartitionFamily::random: return "random";
    case PartitionFamily::adversarial: return "adversarial";
  }
  throw std::invalid_argument("partition_family_name: unknown family");
}

PartitionFamily partition_family_from_name(std::string_view name) {
  if (name == "uniform") return PartitionFamily::uniform;
  if (name == "random") return PartitionFamily::random;
  if (name == "adversarial") return PartitionFamily::adversarial;
  throw std::invalid_argument("unknown partition family '" +
                              std::string(name) + "'");
}

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["epsilon"] = epsilon.str();
  j["delta"] = delta.str();
  auto& names = j["families"] = nlohmann::ordered_json::array();
  for (const PartitionFamily f : families)
    names.push_back(std::string(partition_family_name(f)));
  j["checked"] = checked;
  j["max_sum_norm"] = max_sum_norm.str();
  j["max_diameter"] = max_diameter.str();
  j["all_passed"] = all_passed;
  return j;
}

namespace {

// Smallest n with 1/n < epsilon (so a uniform n-partition qualifies).
std::uint64_t min_uniform_intervals(const Rational& epsilon) {
  if (epsilon > Rational(1)) return 1;
  const Rational inverse = Rational(1) / epsilon;
  return (inverse.numerator() / inverse.denominator())
             .convert_to<std::uint64_t>() +
         1;
}

TaggedPartition family_member(PartitionFamily family, const Rational& epsilon,
                              std::uint64_t i, std::uint64_t seed) {
  constexpr TagStrategy kCycle[3] = {TagStrategy::mixed_random,
                                     TagStrategy::all_rational_midpoint,
                                     TagStrategy::all_irrational};
  const std::uint64_t n_min = min_uniform_intervals(epsilon);
  const auto uniform = [&] {
    return Partition::uniform(Rational(0), Rational(1), n_min + i % 97);
  };
  const auto random = [&] {
    return Partition::random_with_max_gap(Rational(0), Rational(1), epsilon,
                                          n_min + n_min / 4 + i % 89,
                                          derive_seed(seed, 1));
  };
  switch (family) {
    case PartitionFamily::uniform:
      return tag_with_strategy(uniform(), kCycle[i % 3], derive_seed(seed, 2));
    case PartitionFamily::random:
      return tag_with_strategy(random(), kCycle[i % 3], derive_seed(seed, 3));
    case PartitionFamily::adversarial:
      return tag_with_strategy(i % 2 == 0 ? uniform() : random(),
                               TagStrategy::low_index_rational, 0);
  }
  throw std::invalid_argument("certify_epsilon_delta: unknown family");
}

}  // namespace

Certificate certify_epsilon_delta(RationalEnumeration& enumeration,
                                  const Rational& epsilon,
                                  std::span<const PartitionFamily> families,
                                  std::uint64_t count_per_family,
                                  std::uint64_t seed) {
  if (epsilon.sign() <= 0)
    throw std::invalid_argument(
        "certify_epsilon_delta: epsilon must be positive");
  if (families.empty())
    throw std::invalid_argument(
        "certify_epsilon_delta: at least one family required");
  if (count_per_family == 0)
    throw std::invalid_argument("certify_epsilon_delta: count must be >= 1");

  const CounterexamplePath path(enumeration);
  Certificate cert;
  cert.epsilon = epsilon;
  cert.delta = epsilon;  // the proof's delta: sum norm <= diameter < epsilon
  cert.families.assign(families.begin(), families.end());
  cert.all_passed = true;

  std::uint64_t stream = 0;
  for (const PartitionFamily family : families) {
    for (std::uint64_t i = 0; i < count_per_family; ++i) {
      const TaggedPartition tp =
          family_member(family, epsilon, i, derive_seed(seed, stream++));
      if (!(tp.diameter() < epsilon))
        throw std::logic_error(
            "certify_epsilon_delta: family generator produced diameter " +
            tp.diameter().str() + " >= epsilon " + epsilon.str());
      const RiemannSumReport report = riemann_sum(path, tp);
      if (!(report.sum_norm < epsilon)) cert.all_passed = false;
      cert.max_sum_norm = std::max(cert.max_sum_norm, report.sum_norm);
      cert.max_diameter = std::max(cert.max_diameter, report.diameter);
      ++cert.checked;
    }
  }
  return cert;
}

}  // namespace nr
