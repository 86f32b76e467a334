#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "coisocap/checked.hpp"

namespace coisocap {

// Natural number or infinity. Infimum of the empty set is Inf.
class ExtNat {
 public:
  constexpr ExtNat() = default;  // Inf

  static constexpr ExtNat inf() { return ExtNat{}; }
  static ExtNat fin(std::int64_t v) {
    if (v < 0) throw OutOfRange("ExtNat must be nonnegative, got " + std::to_string(v));
    ExtNat e;
    e.value_ = v;
    return e;
  }

  bool is_finite() const { return value_.has_value(); }
  bool is_inf() const { return !value_.has_value(); }
  std::int64_t value() const {
    if (!value_) throw OutOfRange("value() on infinite ExtNat");
    return *value_;
  }

  friend bool operator==(const ExtNat&, const ExtNat&) = default;
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.is_inf() || b.is_inf()) return a.is_inf() <=> b.is_inf();
    return *a.value_ <=> *b.value_;
  }

  // Inf absorbs.
  friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return fin(checked_add(*a.value_, *b.value_));
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }
  friend std::ostream& operator<<(std::ostream& os, const ExtNat& e) { return os << e.to_string(); }

 private:
  std::optional<std::int64_t> value_;
};

}  // namespace coisocap
