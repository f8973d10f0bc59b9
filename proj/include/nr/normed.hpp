#pragma once

#include "nr/algebraic_tag.hpp"
#include "nr/partition.hpp"
#include "nr/rational.hpp"

#include <concepts>
#include <type_traits>
#include <utility>

namespace nr {

// What the exact Riemann-sum machinery needs of a target space: value
// semantics with a default-constructed zero, addition, scaling by a Rational,
// and a norm that is itself an exact Rational. Spaces whose norms need root
// extraction cannot satisfy the last requirement and are out of scope.
template <typename V>
concept NormedVector =
    std::regular<V> && requires(const V& u, const V& v, const Rational& s) {
      { u + v } -> std::same_as<V>;
      { scale(s, v) } -> std::same_as<V>;
      { norm(v) } -> std::same_as<Rational>;
    };

// sum_j path(tag_j) * vol(I_j), accumulated exactly in the target space.
template <typename PathFn>
  requires NormedVector<
      std::remove_cvref_t<std::invoke_result_t<PathFn&, const AlgebraicTag&>>>
auto riemann_sum_value(const TaggedPartition& tp, PathFn&& path) {
  using V =
      std::remove_cvref_t<std::invoke_result_t<PathFn&, const AlgebraicTag&>>;
  V acc{};
  const Partition& p = tp.partition();
  for (std::size_t j = 0; j < p.size(); ++j)
    acc = std::move(acc) + scale(p.vol(j), path(tp.tags()[j]));
  return acc;
}

}  // namespace nr
