#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coisocap/ext_nat.hpp"
#include "coisocap/rational.hpp"

namespace coisocap::kfun {

// One block of k frames in C^n: k >= 1, n >= k.
struct Pair {
  std::int64_t k = 1;
  std::int64_t n = 1;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// True iff a precedes b in canonical order (descending k, then descending n).
inline bool canonical_before(const Pair& a, const Pair& b) {
  return a.k != b.k ? a.k > b.k : a.n > b.n;
}

// Nonempty multiset of pairs, stored in canonical order.
class Decomposition {
 public:
  // Sorts into canonical order; throws OutOfRange on an empty list or a pair
  // violating k >= 1, n >= k.
  explicit Decomposition(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }

  std::int64_t cost() const;    // sum k
  std::int64_t weight() const;  // sum k*n
  std::int64_t dim() const;     // sum k*(2n - k)
  std::int64_t sum_squares() const;  // sum k^2

  // Ordinary lexicographic order on the canonical pair lists; the
  // tie-break among optimal witnesses returns the smallest.
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend auto operator<=>(const Decomposition& a, const Decomposition& b) { return a.pairs_ <=> b.pairs_; }

  std::string to_string() const;  // "[(4,4)]"

 private:
  std::vector<Pair> pairs_;
};

struct WitnessedValue {
  ExtNat value;
  std::optional<Decomposition> witness;

  static WitnessedValue infeasible() { return {}; }
  static WitnessedValue of(Decomposition d) {
    ExtNat v = ExtNat::fin(d.cost());
    return {v, std::move(d)};
  }

  friend bool operator==(const WitnessedValue&, const WitnessedValue&) = default;
};

// Largest n accepted by the exact routines.
inline constexpr std::int64_t kMaxArgument = 1'000'000;

// K(n) = min sum k_i subject to sum k_i^2 = n. Witness pairs have n_i = k_i.
WitnessedValue big_k(std::int64_t n);

// big_k for every n in [from, to] from a single table pass.
std::vector<WitnessedValue> big_k_range(std::int64_t from, std::int64_t to);

// Independent re-validation of a result against the defining constraints:
// recomputes cost, weight and dim from the pairs.
bool valid_keq_result(const WitnessedValue& r, std::int64_t n, std::int64_t d);
bool valid_kk_result(const WitnessedValue& r, std::int64_t n, const Rational& d);
bool valid_big_k_result(const WitnessedValue& r, std::int64_t n);

// K(1..nmax) without witnesses; element 0 holds K(0) = 0.
std::vector<std::int64_t> big_k_table(std::int64_t nmax);

// min cost over decompositions with weight == n and dim == d.
WitnessedValue keq(std::int64_t n, std::int64_t d);

// min cost over decompositions with weight >= n and dim <= floor(d).
WitnessedValue kk(std::int64_t n, const Rational& d);
inline WitnessedValue kk(std::int64_t n, std::int64_t d) { return kk(n, Rational(d)); }

inline constexpr std::int64_t kDefaultOracleCap = 12;

// Cap from COISOCAP_ORACLE_CAP, falling back to kDefaultOracleCap.
std::int64_t oracle_cap_from_env();

// Exhaustive unpruned enumeration; throws CapExceeded above the cap.
WitnessedValue keq_naive(std::int64_t n, std::int64_t d, std::int64_t cap = oracle_cap_from_env());
WitnessedValue kk_naive(std::int64_t n, const Rational& d, std::int64_t cap = oracle_cap_from_env());

// a^2 + b^2 + c^2 + d^2 = n with a >= b >= c >= d >= 0.
std::array<std::int64_t, 4> four_square(std::int64_t n);

// Single-pair witness (ceil(sqrt(2n-d)) + 2, ceil(n/k)) for the square-root
// bound on kk. Requires n >= 9 and n + 6 sqrt(n) - 9 <= d <= 2n.
Decomposition sqrt_bound_witness(std::int64_t n, std::int64_t d);

// Exact test of K < sqrt(n) + 2^{3/2} n^{1/4}.
bool satisfies_four_square_bound(std::int64_t value, std::int64_t n);

// Exact test of value < sqrt(m) + 3 for m >= 0.
bool below_sqrt_plus_three(std::int64_t value, std::int64_t m);

// Exact test of n + 6 sqrt(n) - 9 <= d <= 2n with n >= 9.
bool in_sqrt_bound_window(std::int64_t n, std::int64_t d);

}  // namespace coisocap::kfun
