#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "coisocap/checked.hpp"

namespace coisocap {

// Exact rational in lowest terms with positive denominator. Every operation
// either returns the exact result or throws OverflowError.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const;
  std::int64_t ceil() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" or "p/q" with optional sign.
  static Rational parse(std::string_view text);
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static Rational from_i128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// gcd of two nonnegative rationals: the positive generator of aZ + bZ.
Rational rational_gcd(const Rational& a, const Rational& b);

// Nonnegative rational area measured in units of pi: RatPi{1} is the area pi.
class RatPi {
 public:
  constexpr RatPi() = default;
  explicit RatPi(Rational v);
  static RatPi pi() { return RatPi(Rational(1)); }

  const Rational& in_pi_units() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_positive() const { return value_.is_positive(); }

  RatPi scaled(const Rational& c) const { return RatPi(value_ * c); }

  friend bool operator==(const RatPi&, const RatPi&) = default;
  friend std::strong_ordering operator<=>(const RatPi& a, const RatPi& b) { return a.value_ <=> b.value_; }

  // "pi", "pi/2", "2pi/3", "3/4" (unit pi implied).
  static RatPi parse(std::string_view text);
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RatPi& r) { return os << r.to_string(); }

 private:
  Rational value_;
};

// Nonnegative rational multiple of pi, or infinity.
class ExtRat {
 public:
  constexpr ExtRat() = default;  // Inf
  ExtRat(RatPi v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static ExtRat inf() { return ExtRat{}; }
  bool is_finite() const { return value_.has_value(); }
  bool is_inf() const { return !value_.has_value(); }
  const RatPi& value() const;

  ExtRat scaled(const Rational& c) const { return value_ ? ExtRat(value_->scaled(c)) : inf(); }

  friend bool operator==(const ExtRat&, const ExtRat&) = default;
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  std::string to_string() const { return value_ ? value_->to_string() : "inf"; }
  friend std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.to_string(); }

 private:
  std::optional<RatPi> value_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

}  // namespace coisocap
