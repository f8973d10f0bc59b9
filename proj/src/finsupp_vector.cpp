#include "nr/finsupp_vector.hpp"

#include <ostream>
#include <utility>
#include <string>

namespace nr {

FinSuppVector FinSuppVector::indicator(std::uint64_t k) {
  FinSuppVector v;
  v.entries_.emplace(k, Rational(1));
  return v;
}

Rational FinSuppVector::at(std::uint64_t k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? Rational(0) : it->second;
}

FinSuppVector operator+(const FinSuppVector& u, const FinSuppVector& v) {
  FinSuppVector out = u;
  return std::move(out) + v;
}

FinSuppVector operator+(FinSuppVector&& u, const FinSuppVector& v) {
  FinSuppVector out = std::move(u);
  for (const auto& [k, value] : v.entries_) {
    const auto [it, inserted] = out.entries_.emplace(k, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) out.entries_.erase(it);
    }
  }
  return out;
}

FinSuppVector operator-(const FinSuppVector& v) {
  FinSuppVector out;
  for (const auto& [k, value] : v.entries_) out.entries_.emplace(k, -value);
  return out;
}

FinSuppVector scale(const Rational& s, const FinSuppVector& v) {
  FinSuppVector out;
  if (s.is_zero()) return out;
  for (const auto& [k, value] : v.entries_)
    out.entries_.emplace(k, s * value);
  return out;
}

Rational sup_norm(const FinSuppVector& v) {
  Rational best(0);
  for (const auto& [k, value] : v.entries_)
    best = std::max(best, abs(value));
  return best;
}

nlohmann::ordered_json FinSuppVector::to_json() const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [k, value] : entries_)
    entries[std::to_string(k)] = value.str();
  nlohmann::ordered_json j;
  j["entries"] = std::move(entries);
  return j;
}

FinSuppVector FinSuppVector::from_json(const nlohmann::ordered_json& j) {
  FinSuppVector v;
  for (const auto& [key, value] : j.at("entries").items()) {
    const Rational r = Rational::parse(value.get<std::string>());
    if (!r.is_zero()) v.entries_.emplace(std::stoull(key), r);
  }
  return v;
}

std::string FinSuppVector::str() const { return to_json().dump(); }

std::ostream& operator<<(std::ostream& os, const FinSuppVector& v) {
  return os << v.str();
}

}  // namespace nr
