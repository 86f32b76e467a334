#include "coisocap/kfun.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace coisocap::kfun {

namespace {

void require_argument(std::int64_t v, const char* name, std::int64_t min) {
  if (v < min || v > kMaxArgument) {
    throw OutOfRange(std::string(name) + " must lie in [" + std::to_string(min) + ", " +
                     std::to_string(kMaxArgument) + "], got " + std::to_string(v));
  }
}

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Depth-first search over canonically ordered pair lists. In the `optimize`
// phase candidates are generated in descending order and any strict
// improvement replaces the incumbent. In the `first_at` phase candidates are
// generated in ascending order under the known optimum, so the first complete
// list found is the lexicographically smallest optimal witness.
enum class Phase { optimize, first_at };

class PairSearch {
 public:
  explicit PairSearch(Phase phase, std::int64_t bound) : phase_(phase), bound_(bound) {}

  bool found() const { return !best_.empty(); }
  std::int64_t best_cost() const { return best_cost_; }
  const std::vector<Pair>& best() const { return best_; }

 protected:
  // Remaining cost admissible for a branch that has spent `cost`.
  bool admissible(std::int64_t total_lower_bound) const {
    if (phase_ == Phase::optimize) return total_lower_bound < best_cost_;
    return total_lower_bound <= bound_ && !done_;
  }

  void record(std::int64_t cost) {
    if (phase_ == Phase::optimize) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = stack_;
      }
    } else if (!done_ && cost == bound_) {
      best_cost_ = cost;
      best_ = stack_;
      done_ = true;
    }
  }

  bool ascending() const { return phase_ == Phase::first_at; }

  // Visits lo..hi in the phase's order; stops early once first_at is done.
  template <class F>
  void for_range(std::int64_t lo, std::int64_t hi, F&& f) {
    if (lo > hi) return;
    if (ascending()) {
      for (std::int64_t v = lo; v <= hi && !done_; ++v) f(v);
    } else {
      for (std::int64_t v = hi; v >= lo; --v) f(v);
    }
  }

  Phase phase_;
  std::int64_t bound_;
  std::int64_t best_cost_ = kNoBound;
  bool done_ = false;
  std::vector<Pair> stack_;
  std::vector<Pair> best_;
};

// Equality version. Subtracting the weight identity from the dimension
// identity gives sum k^2 = 2*weight - dim, so a branch with remaining weight
// w and remaining dimension e must spend exactly s = 2w - e in squares.
class EqSearch : public PairSearch {
 public:
  using PairSearch::PairSearch;

  void run(std::int64_t n, std::int64_t d) { descend(n, 2 * n - d, Pair{kNoBound, kNoBound}, 0); }

 private:
  void descend(std::int64_t w, std::int64_t s, Pair cap, std::int64_t cost) {
    const std::int64_t kmax = std::min(cap.k, isqrt(s));
    for_range(1, kmax, [&](std::int64_t k) {
      const std::int64_t s_rest = s - k * k;
      const std::int64_t rest_lb = s_rest > 0 ? ceil_div(s_rest, k) : 0;
      if (!admissible(cost + k + rest_lb)) return;

      std::int64_t mlo = k;
      std::int64_t mhi;
      if (s_rest == 0) {
        // Last pair: must consume the remaining weight exactly.
        if (w % k != 0) return;
        mlo = mhi = w / k;
      } else {
        // Remaining weight must stay >= remaining squares (dim >= weight).
        mhi = (w - s_rest) / k;
      }
      if (k == cap.k) mhi = std::min(mhi, cap.n);
      if (mlo < k) return;

      for_range(mlo, mhi, [&](std::int64_t m) {
        stack_.push_back({k, m});
        const std::int64_t w_rest = w - k * m;
        if (w_rest == 0) {
          if (s_rest == 0) record(cost + k);
        } else if (s_rest >= 1 && w_rest >= s_rest) {
          descend(w_rest, s_rest, Pair{k, m}, cost + k);
        }
        stack_.pop_back();
      });
    });
  }
};

// Relaxed version. A branch still needing weight w > 0 within dimension
// budget e needs sum k^2 >= 2w - e over its remaining pairs.
class RelaxedSearch : public PairSearch {
 public:
  using PairSearch::PairSearch;

  void run(std::int64_t n, std::int64_t dmax) {
    dmax_ = dmax;
    descend(n, dmax, Pair{kNoBound, kNoBound}, 0);
  }

 private:
  void descend(std::int64_t w, std::int64_t e, Pair cap, std::int64_t cost) {
    const std::int64_t kmax = std::min(cap.k, isqrt(e));
    for_range(1, kmax, [&](std::int64_t k) {
      if (!admissible(cost + k)) return;
      // k(2m - k) <= e and k*m <= dmax.
      std::int64_t mhi = std::min((e + k * k) / (2 * k), dmax_ / k);
      if (k == cap.k) mhi = std::min(mhi, cap.n);
      for_range(k, mhi, [&](std::int64_t m) {
        const std::int64_t w_rest = w - k * m;
        const std::int64_t e_rest = e - k * (2 * m - k);
        stack_.push_back({k, m});
        if (w_rest <= 0) {
          record(cost + k);
        } else if (e_rest >= w_rest) {
          const std::int64_t sq = 2 * w_rest - e_rest;
          const std::int64_t rest_lb = std::max<std::int64_t>(1, sq > 0 ? ceil_div(sq, k) : 0);
          if (admissible(cost + k + rest_lb)) descend(w_rest, e_rest, Pair{k, m}, cost + k);
        }
        stack_.pop_back();
      });
    });
  }

  std::int64_t dmax_ = 0;
};

template <class Search, class... Args>
WitnessedValue two_phase(Args... args) {
  Search opt(Phase::optimize, kNoBound);
  opt.run(args...);
  if (!opt.found()) return WitnessedValue::infeasible();
  Search first(Phase::first_at, opt.best_cost());
  first.run(args...);
  if (!first.found()) throw std::logic_error("witness search lost the optimum");
  return WitnessedValue::of(Decomposition(first.best()));
}

// Unpruned enumeration of every canonical list with total weight <= limit.
class Enumerator {
 public:
  using Visit = std::function<void(const std::vector<Pair>&)>;

  Enumerator(std::int64_t limit, Visit visit) : limit_(limit), visit_(std::move(visit)) {}

  void run() { extend(0, Pair{limit_, limit_}); }

 private:
  void extend(std::int64_t weight, Pair cap) {
    for (std::int64_t k = 1; k <= cap.k; ++k) {
      for (std::int64_t m = k; k * m + weight <= limit_; ++m) {
        Pair p{k, m};
        if (canonical_before(p, cap)) continue;  // must not precede the previous pair
        stack_.push_back(p);
        visit_(stack_);
        extend(weight + k * m, p);
        stack_.pop_back();
      }
    }
  }

  std::int64_t limit_;
  Visit visit_;
  std::vector<Pair> stack_;
};

WitnessedValue naive_min(std::int64_t limit, const std::function<bool(std::int64_t, std::int64_t)>& accept) {
  std::optional<Decomposition> best;
  Enumerator(limit, [&](const std::vector<Pair>& pairs) {
    std::int64_t weight = 0, dim = 0, cost = 0;
    for (const Pair& p : pairs) {
      weight += p.k * p.n;
      dim += p.k * (2 * p.n - p.k);
      cost += p.k;
    }
    if (!accept(weight, dim)) return;
    if (best && cost > best->cost()) return;
    Decomposition cand(pairs);
    if (!best || cost < best->cost() || cand < *best) best = std::move(cand);
  }).run();
  if (!best) return WitnessedValue::infeasible();
  return WitnessedValue::of(std::move(*best));
}

void require_cap(std::int64_t n, std::int64_t dfloor, std::int64_t cap) {
  if (n > cap) throw CapExceeded("naive oracle: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (dfloor > 2 * cap)
    throw CapExceeded("naive oracle: d = " + std::to_string(dfloor) + " exceeds 2*cap = " + std::to_string(2 * cap));
}

}  // namespace

Decomposition::Decomposition(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw OutOfRange("decomposition needs at least one pair");
  for (const Pair& p : pairs_) {
    if (p.k < 1 || p.n < p.k)
      throw OutOfRange("pair (" + std::to_string(p.k) + "," + std::to_string(p.n) + ") violates n >= k >= 1");
  }
  std::sort(pairs_.begin(), pairs_.end(), canonical_before);
}

std::int64_t Decomposition::cost() const {
  std::int64_t s = 0;
  for (const Pair& p : pairs_) s = checked_add(s, p.k);
  return s;
}

std::int64_t Decomposition::weight() const {
  std::int64_t s = 0;
  for (const Pair& p : pairs_) s = checked_add(s, checked_mul(p.k, p.n));
  return s;
}

std::int64_t Decomposition::dim() const {
  std::int64_t s = 0;
  for (const Pair& p : pairs_) s = checked_add(s, checked_mul(p.k, checked_sub(checked_mul(2, p.n), p.k)));
  return s;
}

std::int64_t Decomposition::sum_squares() const {
  std::int64_t s = 0;
  for (const Pair& p : pairs_) s = checked_add(s, checked_mul(p.k, p.k));
  return s;
}

std::string Decomposition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) os << ',';
    os << '(' << pairs_[i].k << ',' << pairs_[i].n << ')';
  }
  os << ']';
  return os.str();
}

std::vector<std::int64_t> big_k_table(std::int64_t nmax) {
  require_argument(nmax, "n", 0);
  std::vector<std::int64_t> K(static_cast<std::size_t>(nmax) + 1, 0);
  for (std::int64_t r = 1; r <= nmax; ++r) {
    std::int64_t best = r;  // all ones
    for (std::int64_t k = 2; k * k <= r; ++k) best = std::min(best, k + K[r - k * k]);
    K[r] = best;
  }
  return K;
}

namespace {

// min_cap[r]: smallest possible largest part among optimal decompositions of
// r. Walking it down from n yields the lexicographically smallest witness.
std::vector<std::int64_t> min_cap_table(const std::vector<std::int64_t>& K) {
  std::vector<std::int64_t> min_cap(K.size(), 0);
  for (std::size_t r = 1; r < K.size(); ++r) {
    const auto ri = static_cast<std::int64_t>(r);
    for (std::int64_t k = 1; k * k <= ri; ++k) {
      if (k + K[ri - k * k] == K[ri] && min_cap[ri - k * k] <= k) {
        min_cap[ri] = k;
        break;
      }
    }
  }
  return min_cap;
}

WitnessedValue walk_min_cap(const std::vector<std::int64_t>& min_cap, std::int64_t n) {
  std::vector<Pair> pairs;
  for (std::int64_t r = n; r > 0; r -= min_cap[r] * min_cap[r]) pairs.push_back({min_cap[r], min_cap[r]});
  return WitnessedValue::of(Decomposition(std::move(pairs)));
}

bool valid_pairs(const Decomposition& w) {
  for (std::size_t i = 0; i < w.pairs().size(); ++i) {
    const Pair& p = w.pairs()[i];
    if (p.k < 1 || p.n < p.k) return false;
    if (i > 0 && canonical_before(p, w.pairs()[i - 1])) return false;
  }
  return true;
}

struct Sums {
  std::int64_t cost = 0, weight = 0, dim = 0;
};

Sums recompute(const Decomposition& w) {
  Sums s;
  for (const Pair& p : w.pairs()) {
    s.cost = checked_add(s.cost, p.k);
    s.weight = checked_add(s.weight, checked_mul(p.k, p.n));
    s.dim = checked_add(s.dim, checked_mul(p.k, 2 * p.n - p.k));
  }
  return s;
}

}  // namespace

WitnessedValue big_k(std::int64_t n) {
  require_argument(n, "n", 1);
  return walk_min_cap(min_cap_table(big_k_table(n)), n);
}

std::vector<WitnessedValue> big_k_range(std::int64_t from, std::int64_t to) {
  require_argument(from, "from", 1);
  require_argument(to, "to", from);
  const auto min_cap = min_cap_table(big_k_table(to));
  std::vector<WitnessedValue> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::int64_t n = from; n <= to; ++n) out.push_back(walk_min_cap(min_cap, n));
  return out;
}

bool valid_big_k_result(const WitnessedValue& r, std::int64_t n) {
  if (r.value.is_inf() || !r.witness || !valid_pairs(*r.witness)) return false;
  std::int64_t squares = 0;
  for (const Pair& p : r.witness->pairs()) {
    if (p.n != p.k) return false;
    squares += p.k * p.k;
  }
  return squares == n && recompute(*r.witness).cost == r.value.value();
}

bool valid_keq_result(const WitnessedValue& r, std::int64_t n, std::int64_t d) {
  if (r.value.is_inf()) return !r.witness.has_value();
  if (!r.witness || !valid_pairs(*r.witness)) return false;
  const Sums s = recompute(*r.witness);
  return s.cost == r.value.value() && s.weight == n && s.dim == d;
}

bool valid_kk_result(const WitnessedValue& r, std::int64_t n, const Rational& d) {
  if (r.value.is_inf()) return !r.witness.has_value();
  if (!r.witness || !valid_pairs(*r.witness)) return false;
  const Sums s = recompute(*r.witness);
  return s.cost == r.value.value() && s.weight >= n && Rational(s.dim) <= d;
}

WitnessedValue keq(std::int64_t n, std::int64_t d) {
  require_argument(n, "n", 1);
  require_argument(d, "d", 0);
  // Every pair has k*n <= k(2n-k) <= 2kn - 1.
  if (d < n || d > 2 * n - 1) return WitnessedValue::infeasible();
  return two_phase<EqSearch>(n, d);
}

WitnessedValue kk(std::int64_t n, const Rational& d) {
  require_argument(n, "n", 1);
  if (d.is_negative()) throw OutOfRange("d must be nonnegative, got " + d.to_string());
  // dim >= weight >= n for any feasible decomposition.
  // Beyond 2n-1 the single pair (1,n) is feasible and optimal at every d.
  const std::int64_t dfloor = std::min(d.floor(), 2 * n - 1);
  if (dfloor < n) return WitnessedValue::infeasible();
  return two_phase<RelaxedSearch>(n, dfloor);
}

std::int64_t oracle_cap_from_env() {
  const char* raw = std::getenv("COISOCAP_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 1) throw ParseError(std::string("COISOCAP_ORACLE_CAP must be a positive integer, got '") + raw + "'");
  return v;
}

WitnessedValue keq_naive(std::int64_t n, std::int64_t d, std::int64_t cap) {
  if (n < 1 || d < 0) throw OutOfRange("keq_naive requires n >= 1 and d >= 0");
  require_cap(n, d, cap);
  return naive_min(n, [&](std::int64_t weight, std::int64_t dim) { return weight == n && dim == d; });
}

WitnessedValue kk_naive(std::int64_t n, const Rational& d, std::int64_t cap) {
  if (n < 1 || d.is_negative()) throw OutOfRange("kk_naive requires n >= 1 and d >= 0");
  const std::int64_t dfloor = d.floor();
  require_cap(n, dfloor, cap);
  return naive_min(dfloor, [&](std::int64_t weight, std::int64_t dim) { return weight >= n && dim <= dfloor; });
}

std::array<std::int64_t, 4> four_square(std::int64_t n) {
  require_argument(n, "n", 0);
  for (std::int64_t a = isqrt(n); a >= 0; --a) {
    const std::int64_t ra = n - a * a;
    for (std::int64_t b = std::min(a, isqrt(ra)); b >= 0; --b) {
      const std::int64_t rb = ra - b * b;
      if (rb > 2 * b * b) break;  // c, d <= b cannot cover rb
      for (std::int64_t c = std::min(b, isqrt(rb)); c >= 0; --c) {
        const std::int64_t rc = rb - c * c;
        if (rc > c * c) break;
        const std::int64_t dd = isqrt(rc);
        if (dd * dd == rc) return {a, b, c, dd};
      }
    }
  }
  throw std::logic_error("four_square: no representation found for " + std::to_string(n));
}

bool in_sqrt_bound_window(std::int64_t n, std::int64_t d) {
  if (n < 9 || d > 2 * n) return false;
  const __int128 t = static_cast<__int128>(d) - n + 9;
  return t >= 0 && t * t >= static_cast<__int128>(36) * n;
}

Decomposition sqrt_bound_witness(std::int64_t n, std::int64_t d) {
  require_argument(n, "n", 1);
  if (!in_sqrt_bound_window(n, d)) {
    throw OutOfRange("sqrt_bound_witness requires n >= 9 and n + 6*sqrt(n) - 9 <= d <= 2n, got (n, d) = (" +
                     std::to_string(n) + ", " + std::to_string(d) + ")");
  }
  const std::int64_t k = ceil_sqrt(2 * n - d) + 2;
  Decomposition w({Pair{k, ceil_div(n, k)}});
  if (w.weight() < n || w.dim() > d) throw std::logic_error("sqrt_bound_witness produced an infeasible pair");
  return w;
}

bool satisfies_four_square_bound(std::int64_t value, std::int64_t n) {
  if (n < 1) return false;
  const __int128 K = value, N = n;
  if (K * K <= N) return true;
  // K > sqrt(n): square (K - sqrt n)^2 < 8 sqrt n, then square again.
  const __int128 lhs = K * K + N;
  const __int128 coef = 2 * K + 8;
  return lhs * lhs < coef * coef * N;
}

bool below_sqrt_plus_three(std::int64_t value, std::int64_t m) {
  if (m < 0) throw OutOfRange("below_sqrt_plus_three needs m >= 0");
  if (value < 3) return true;
  const __int128 t = value - 3;
  return t * t < m;
}

}  // namespace coisocap::kfun
