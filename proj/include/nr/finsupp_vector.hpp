#pragma once

#include "nr/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace nr {

// Finitely supported sequence of rationals indexed by naturals, under the
// sup-norm — the subspace of the bounded-sequence space that finite linear
// combinations of indicator sequences generate. Finite support keeps the
// sup-norm an exact max over stored entries. Canonical sparsity is a class
// invariant: no stored entry is zero.
class FinSuppVector {
 public:
  FinSuppVector() = default;  // the zero sequence

  // The sequence with 1 at position k and 0 elsewhere.
  static FinSuppVector indicator(std::uint64_t k);

  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::map<std::uint64_t, Rational>& entries() const { return entries_; }
  Rational at(std::uint64_t k) const;

  friend bool operator==(const FinSuppVector&, const FinSuppVector&) = default;

  friend FinSuppVector operator+(const FinSuppVector& u,
                                 const FinSuppVector& v);
  // rvalue overload so running sums reuse the accumulator's storage
  friend FinSuppVector operator+(FinSuppVector&& u, const FinSuppVector& v);
  friend FinSuppVector operator-(const FinSuppVector& v);
  friend FinSuppVector operator-(const FinSuppVector& u,
                                 const FinSuppVector& v) {
    return u + (-v);
  }
  friend FinSuppVector scale(const Rational& s, const FinSuppVector& v);

  // max |entry| over the support, 0 for the zero sequence.
  friend Rational sup_norm(const FinSuppVector& v);
  friend Rational norm(const FinSuppVector& v) { return sup_norm(v); }

  // {"entries": {"3": "1/2", ...}}
  nlohmann::ordered_json to_json() const;
  static FinSuppVector from_json(const nlohmann::ordered_json& j);

  std::string str() const;

 private:
  std::map<std::uint64_t, Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const FinSuppVector& v);

}  // namespace nr
