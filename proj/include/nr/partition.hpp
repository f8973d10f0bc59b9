#pragma once

#include "nr/algebraic_tag.hpp"
#include "nr/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nr {

enum class Closure { half_open, closed };

// Nondegenerate interval with exact rational endpoints: [lower, upper) or
// [lower, upper]. Degenerate intervals are rejected — they could carry no tag.
struct Interval {
  Interval(Rational lower_bound, Rational upper_bound, Closure how);

  Rational vol() const { return upper - lower; }
  bool contains(const AlgebraicTag& t) const;

  Rational lower;
  Rational upper;
  Closure closure;
};

// Partition of a compact interval [a,b]: strictly increasing breakpoints
// x_0 = a < x_1 < ... < x_n = b, inducing the intervals
//   I_j = [x_{j-1}, x_j)  for j < n,   I_n = [x_{n-1}, x_n]  (last one closed),
// which are mutually disjoint with union [a,b]. A single interval partition
// is the closed [a,b] itself.
class Partition {
 public:
  static Partition from_breakpoints(std::vector<Rational> breakpoints);
  static Partition uniform(const Rational& a, const Rational& b,
                           std::uint64_t n);
  // n intervals with interior breakpoints drawn from a fixed power-of-two
  // denominator grid (1/65536 by default, finer only when n needs the room,
  // never finer than 2^-32); deterministic in seed.
  static Partition random(const Rational& a, const Rational& b,
                          std::uint64_t n, std::uint64_t seed);
  // Random partition with every interval length strictly below max_gap:
  // a random draw of about target_intervals points, then oversize gaps are
  // split on the same integer grid. Deterministic in seed.
  static Partition random_with_max_gap(const Rational& a, const Rational& b,
                                       const Rational& max_gap,
                                       std::uint64_t target_intervals,
                                       std::uint64_t seed);

  std::size_t size() const { return breakpoints_.size() - 1; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const Rational& lower() const { return breakpoints_.front(); }
  const Rational& upper() const { return breakpoints_.back(); }

  Interval interval(std::size_t j) const;  // j in [0, size())
  Rational vol(std::size_t j) const;
  Rational diameter() const;

  friend bool operator==(const Partition&, const Partition&) = default;

  nlohmann::ordered_json to_json() const;
  static Partition from_json(const nlohmann::ordered_json& j);

 private:
  explicit Partition(std::vector<Rational> breakpoints)
      : breakpoints_(std::move(breakpoints)) {}

  std::vector<Rational> breakpoints_;
};

// Breakpoints of the union; diameter never exceeds either input's.
Partition common_refinement(const Partition& p, const Partition& q);

enum class TagStrategy {
  all_rational_midpoint,  // tag_j = (x_{j-1} + x_j) / 2
  all_irrational,         // tag_j = x_{j-1} + vol(I_j) * sqrt(2)/2
  mixed_random,           // seeded per-interval coin between the two above
  low_index_rational,     // smallest-enumeration-index rational in the open
                          // interior (Stern-Brocot descent)
};

std::string_view tag_strategy_name(TagStrategy s);

// Partition plus one sample point per interval, each lying in its interval
// under the closure convention above (which forces the tags to be pairwise
// distinct). Membership is checked exactly on construction.
class TaggedPartition {
 public:
  TaggedPartition(Partition partition, std::vector<AlgebraicTag> tags);

  const Partition& partition() const { return partition_; }
  const std::vector<AlgebraicTag>& tags() const { return tags_; }
  Rational diameter() const { return partition_.diameter(); }

  nlohmann::ordered_json to_json() const;
  static TaggedPartition from_json(const nlohmann::ordered_json& j);

 private:
  Partition partition_;
  std::vector<AlgebraicTag> tags_;
};

TaggedPartition tag_with_strategy(const Partition& p, TagStrategy strategy,
                                  std::uint64_t seed);

}  // namespace nr
