#pragma once

#include <cstdint>
#include <string>

#include "coisocap/errors.hpp"

namespace coisocap {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("int64 overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("int64 overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("int64 overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline std::int64_t narrow_i128(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in int64");
  return static_cast<std::int64_t>(v);
}

// floor(sqrt(n)) for n >= 0, exact.
inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw OutOfRange("isqrt of negative value");
  std::int64_t r = 0;
  std::int64_t bit = std::int64_t{1} << 62;
  while (bit > n) bit >>= 2;
  while (bit != 0) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

// ceil(sqrt(n)) for n >= 0.
inline std::int64_t ceil_sqrt(std::int64_t n) {
  std::int64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

}  // namespace coisocap
