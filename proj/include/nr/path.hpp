#pragma once

#include "nr/algebraic_tag.hpp"
#include "nr/enumeration.hpp"
#include "nr/finsupp_vector.hpp"
#include "nr/partition.hpp"
#include "nr/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace nr {

// The bounded path on [0,1] into the sequence space that sends the k-th
// rational of the canonical enumeration to the k-th indicator sequence and
// every irrational to the zero sequence. Riemann-integrable with integral
// zero, while its pointwise norm is the characteristic function of the
// rationals — which no partition refinement can integrate.
class CounterexamplePath {
 public:
  explicit CounterexamplePath(RationalEnumeration& enumeration)
      : enumeration_(&enumeration) {}

  // F(t); throws std::domain_error outside [0,1] (exact check).
  FinSuppVector operator()(const AlgebraicTag& t) const;

  // |F(t)| without building the vector: 1 on rationals, 0 elsewhere.
  Rational norm_at(const AlgebraicTag& t) const;

 private:
  RationalEnumeration* enumeration_;
};

// One Riemann sum, computed twice: by direct sparse accumulation and by the
// closed form (max interval volume over rational tags). The two must agree,
// and neither may exceed the partition diameter; riemann_sum() checks both
// identities and throws std::logic_error on violation — they are theorems,
// so a violation is an implementation bug, not a finding.
struct RiemannSumReport {
  TaggedPartition tagged_partition;
  FinSuppVector sum;
  Rational sum_norm;
  Rational closed_form_norm;
  Rational diameter;
};

RiemannSumReport riemann_sum(const CounterexamplePath& path,
                             const TaggedPartition& tp);

// max{ vol(I_j) : tag_j rational }, 0 when every tag is irrational. Looks
// only at tag rationality and interval volumes — independent of the sparse
// accumulation route above.
Rational closed_form_sum_norm(const TaggedPartition& tp);

enum class PartitionFamily { uniform, random, adversarial };

std::string_view partition_family_name(PartitionFamily f);
PartitionFamily partition_family_from_name(std::string_view name);

struct Certificate {
  Rational epsilon;
  Rational delta;
  std::vector<PartitionFamily> families;
  std::uint64_t checked = 0;
  Rational max_sum_norm;
  Rational max_diameter;
  bool all_passed = false;

  nlohmann::ordered_json to_json() const;
};

// Sweeps `count_per_family` tagged partitions of diameter < epsilon per
// family and records that every Riemann-sum norm stayed strictly below
// epsilon (delta = epsilon suffices: the sum norm never exceeds the
// diameter). Families: uniform (n just past 1/epsilon), random (max-gap
// constrained), adversarial (low_index_rational tags on both kinds).
// Deterministic in seed.
Certificate certify_epsilon_delta(RationalEnumeration& enumeration,
                                  const Rational& epsilon,
                                  std::span<const PartitionFamily> families,
                                  std::uint64_t count_per_family,
                                  std::uint64_t seed);

}  // namespace nr
