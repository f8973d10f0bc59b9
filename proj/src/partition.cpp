#include "nr/partition.hpp"

#include "nr/enumeration.hpp"
#include "nr/rng.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace nr {

namespace {

constexpr std::uint64_t kBaseGrid = 1ull << 16;
constexpr std::uint64_t kMaxGrid = 1ull << 32;

std::uint64_t grid_for(std::uint64_t needed) {
  std::uint64_t grid = kBaseGrid;
  while (grid < needed) {
    if (grid == kMaxGrid)
      throw std::invalid_argument(
          "Partition::random: n exceeds the 2^32 breakpoint grid");
    grid *= 2;
  }
  return grid;
}

// strictly increasing interior grid positions -> breakpoints of [a,b]
std::vector<Rational> grid_breakpoints(const Rational& a, const Rational& b,
                                       const std::vector<std::uint64_t>& ticks,
                                       std::uint64_t grid) {
  const Rational width = b - a;
  std::vector<Rational> xs;
  xs.reserve(ticks.size() + 2);
  xs.push_back(a);
  for (const std::uint64_t t : ticks)
    xs.push_back(a + width * Rational(BigInt(t), BigInt(grid)));
  xs.push_back(b);
  return xs;
}

}  // namespace

Interval::Interval(Rational lower_bound, Rational upper_bound, Closure how)
    : lower(std::move(lower_bound)), upper(std::move(upper_bound)),
      closure(how) {
  if (!(lower < upper))
    throw std::invalid_argument("Interval: need lower < upper, got [" +
                                lower.str() + ", " + upper.str() + ")");
}

bool Interval::contains(const AlgebraicTag& t) const {
  if (t < AlgebraicTag(lower)) return false;
  const AlgebraicTag hi(upper);
  return closure == Closure::closed ? t <= hi : t < hi;
}

Partition Partition::from_breakpoints(std::vector<Rational> breakpoints) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("Partition: need at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i]))
      throw std::invalid_argument(
          "Partition: breakpoints must be strictly increasing");
  return Partition(std::move(breakpoints));
}

Partition Partition::uniform(const Rational& a, const Rational& b,
                             std::uint64_t n) {
  if (!(a < b)) throw std::invalid_argument("Partition::uniform: need a < b");
  if (n == 0) throw std::invalid_argument("Partition::uniform: need n >= 1");
  const Rational width = b - a;
  std::vector<Rational> xs;
  xs.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k)
    xs.push_back(a + width * Rational(BigInt(k), BigInt(n)));
  return Partition(std::move(xs));
}

Partition Partition::random(const Rational& a, const Rational& b,
                            std::uint64_t n, std::uint64_t seed) {
  if (!(a < b)) throw std::invalid_argument("Partition::random: need a < b");
  if (n == 0) throw std::invalid_argument("Partition::random: need n >= 1");
  const std::uint64_t grid = grid_for(4 * n);
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> ticks;
  while (ticks.size() < n - 1)
    ticks.insert(1 + uniform_below(rng, grid - 1));
  return Partition(grid_breakpoints(
      a, b, std::vector<std::uint64_t>(ticks.begin(), ticks.end()), grid));
}

Partition Partition::random_with_max_gap(const Rational& a, const Rational& b,
                                         const Rational& max_gap,
                                         std::uint64_t target_intervals,
                                         std::uint64_t seed) {
  if (!(a < b))
    throw std::invalid_argument("Partition::random_with_max_gap: need a < b");
  if (max_gap.sign() <= 0)
    throw std::invalid_argument(
        "Partition::random_with_max_gap: max_gap must be positive");
  if (target_intervals == 0) target_intervals = 1;
  if (target_intervals > (kMaxGrid >> 2))
    throw std::invalid_argument(
        "Partition::random_with_max_gap: target_intervals too large");

  // Work in integer ticks over a grid fine enough that "gap < max_gap" leaves
  // at least a few ticks of room: gap_ticks <= ceil(grid * max_gap/(b-a)) - 1.
  const Rational relative = max_gap / (b - a);
  std::uint64_t grid = kBaseGrid;
  auto tick_budget = [&](std::uint64_t g) -> BigInt {
    const Rational t = relative * Rational(BigInt(g));
    // ceil(t) - 1: largest integer strictly below t.
    return (t.numerator() + t.denominator() - 1) / t.denominator() - 1;
  };
  while (tick_budget(grid) < 4 || grid < 4 * target_intervals) {
    if (grid == kMaxGrid)
      throw std::invalid_argument(
          "Partition::random_with_max_gap: max_gap too small for the 2^32 "
          "breakpoint grid");
    grid *= 2;
  }
  const BigInt budget = tick_budget(grid);
  const std::uint64_t max_ticks = budget >= BigInt(grid)
                                      ? grid
                                      : budget.convert_to<std::uint64_t>();

  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> ticks;
  while (ticks.size() < target_intervals - 1)
    ticks.insert(1 + uniform_below(rng, grid - 1));

  // Split any gap of more than max_ticks ticks into near-equal integer chunks.
  std::vector<std::uint64_t> interior;
  std::uint64_t previous = 0;
  auto split_gap = [&](std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t gap = hi - lo;
    if (gap > max_ticks) {
      const std::uint64_t pieces = (gap + max_ticks - 1) / max_ticks;
      for (std::uint64_t i = 1; i < pieces; ++i)
        interior.push_back(lo + gap * i / pieces);
    }
  };
  for (const std::uint64_t t : ticks) {
    split_gap(previous, t);
    interior.push_back(t);
    previous = t;
  }
  split_gap(previous, grid);
  return Partition(grid_breakpoints(a, b, interior, grid));
}

Interval Partition::interval(std::size_t j) const {
  const bool last = j + 1 == size();
  return Interval(breakpoints_[j], breakpoints_[j + 1],
                  last ? Closure::closed : Closure::half_open);
}

Rational Partition::vol(std::size_t j) const {
  return breakpoints_[j + 1] - breakpoints_[j];
}

Rational Partition::diameter() const {
  Rational best = vol(0);
  for (std::size_t j = 1; j < size(); ++j) best = std::max(best, vol(j));
  return best;
}

Partition common_refinement(const Partition& p, const Partition& q) {
  if (p.lower() != q.lower() || p.upper() != q.upper())
    throw std::invalid_argument(
        "common_refinement: partitions cover different base intervals");
  std::vector<Rational> merged;
  merged.reserve(p.breakpoints().size() + q.breakpoints().size());
  std::merge(p.breakpoints().begin(), p.breakpoints().end(),
             q.breakpoints().begin(), q.breakpoints().end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return Partition::from_breakpoints(std::move(merged));
}

std::string_view tag_strategy_name(TagStrategy s) {
  switch (s) {
    case TagStrategy::all_rational_midpoint: return "all_rational_midpoint";
    case TagStrategy::all_irrational: return "all_irrational";
    case TagStrategy::mixed_random: return "mixed_random";
    case TagStrategy::low_index_rational: return "low_index_rational";
  }
  throw std::invalid_argument("tag_with_strategy: unknown strategy");
}

TaggedPartition::TaggedPartition(Partition partition,
                                 std::vector<AlgebraicTag> tags)
    : partition_(std::move(partition)), tags_(std::move(tags)) {
  if (tags_.size() != partition_.size())
    throw std::invalid_argument("TaggedPartition: need one tag per interval");
  for (std::size_t j = 0; j < tags_.size(); ++j)
    if (!partition_.interval(j).contains(tags_[j]))
      throw std::invalid_argument("TaggedPartition: tag " + tags_[j].str() +
                                  " lies outside interval " +
                                  std::to_string(j));
}

TaggedPartition tag_with_strategy(const Partition& p, TagStrategy strategy,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Rational half(1, 2);
  std::vector<AlgebraicTag> tags;
  tags.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Rational& lo = p.breakpoints()[j];
    const Rational& hi = p.breakpoints()[j + 1];
    const auto midpoint = [&] { return AlgebraicTag(half * (lo + hi)); };
    // lo + vol * sqrt(2)/2 is interior (0 < sqrt(2)/2 < 1) and has a nonzero
    // sqrt2 coefficient, hence irrational.
    const auto irrational = [&] {
      return AlgebraicTag(lo, half * (hi - lo));
    };
    switch (strategy) {
      case TagStrategy::all_rational_midpoint:
        tags.push_back(midpoint());
        break;
      case TagStrategy::all_irrational:
        tags.push_back(irrational());
        break;
      case TagStrategy::mixed_random:
        tags.push_back((rng() & 1) ? midpoint() : irrational());
        break;
      case TagStrategy::low_index_rational:
        tags.push_back(AlgebraicTag(simplest_rational_between(lo, hi)));
        break;
    }
  }
  return TaggedPartition(p, std::move(tags));
}

nlohmann::ordered_json Partition::to_json() const {
  nlohmann::ordered_json j;
  auto& xs = j["breakpoints"] = nlohmann::ordered_json::array();
  for (const Rational& x : breakpoints_) xs.push_back(x.str());
  return j;
}

Partition Partition::from_json(const nlohmann::ordered_json& j) {
  std::vector<Rational> xs;
  for (const auto& item : j.at("breakpoints"))
    xs.push_back(Rational::parse(item.get<std::string>()));
  return from_breakpoints(std::move(xs));
}

nlohmann::ordered_json TaggedPartition::to_json() const {
  nlohmann::ordered_json j = partition_.to_json();
  auto& ts = j["tags"] = nlohmann::ordered_json::array();
  for (const AlgebraicTag& t : tags_) ts.push_back(t.str());
  return j;
}

TaggedPartition TaggedPartition::from_json(const nlohmann::ordered_json& j) {
  Partition p = Partition::from_json(j);
  std::vector<AlgebraicTag> tags;
  for (const auto& item : j.at("tags"))
    tags.push_back(AlgebraicTag::parse(item.get<std::string>()));
  return TaggedPartition(std::move(p), std::move(tags));
}

}  // namespace nr
