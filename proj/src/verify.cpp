#include "coisocap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <stdexcept>

#include "coisocap/bounds.hpp"
#include "coisocap/errors.hpp"
#include "coisocap/kfun.hpp"
#include "coisocap/spectra.hpp"

namespace coisocap::verify {

namespace {

using kfun::WitnessedValue;
using std::int64_t;
using std::to_string;

std::string tuple(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : fields) {
    if (!first) out += ", ";
    out += std::string(k) + "=" + v;
    first = false;
  }
  return out + ")";
}

std::string range(int64_t nlo, int64_t nhi, int64_t dlo, int64_t dhi) {
  return "n=" + to_string(nlo) + ".." + to_string(nhi) + " d=" + to_string(dlo) + ".." + to_string(dhi);
}

// Value grid filled once before the checks fan out; read-only afterwards.
template <class T>
class Grid {
 public:
  Grid(int64_t nmax, int64_t dmax) : nmax_(nmax), dmax_(dmax), cells_((nmax + 1) * (dmax + 1)) {}
  T& at(int64_t n, int64_t d) { return cells_.at(n * (dmax_ + 1) + d); }
  const T& at(int64_t n, int64_t d) const { return cells_.at(n * (dmax_ + 1) + d); }
  int64_t nmax() const { return nmax_; }
  int64_t dmax() const { return dmax_; }

  template <class F>
  void fill_rows(F&& f) {
    std::vector<std::future<void>> rows;
    for (int64_t n = 1; n <= nmax_; ++n) {
      rows.push_back(std::async(std::launch::async, [this, n, &f] {
        for (int64_t d = 0; d <= dmax_; ++d) at(n, d) = f(n, d);
      }));
    }
    for (auto& r : rows) r.get();
  }

 private:
  int64_t nmax_, dmax_;
  std::vector<T> cells_;
};

struct KfunTables {
  std::vector<int64_t> K;
  Grid<WitnessedValue> keq;
  Grid<WitnessedValue> kk;       // integer d
  Grid<WitnessedValue> kk_half;  // d + 1/2

  KfunTables(int64_t nmax, int64_t dmax)
      : K(kfun::big_k_table(std::max<int64_t>(2 * nmax, 200))),
        keq(nmax, std::max(dmax, 2 * nmax)),
        kk(2 * nmax, 2 * dmax),
        kk_half(nmax, dmax) {
    keq.fill_rows([](int64_t n, int64_t d) { return kfun::keq(n, d); });
    kk.fill_rows([](int64_t n, int64_t d) { return kfun::kk(n, d); });
    kk_half.fill_rows([](int64_t n, int64_t d) { return kfun::kk(n, Rational(2 * d + 1, 2)); });
  }
};

using CheckFn = std::function<CheckResult()>;

// Exhaustive minimum over partitions of n into squares (no DP, no pruning).
int64_t exhaustive_k(int64_t n, int64_t cap) {
  if (n == 0) return 0;
  int64_t best = INT64_MAX;
  for (int64_t k = std::min(cap, isqrt(n)); k >= 1; --k) best = std::min(best, k + exhaustive_k(n - k * k, k));
  return best;
}

void kfun_checks(const KfunTables& t, int64_t nmax, int64_t dmax, std::vector<CheckFn>& out) {
  out.push_back([&t, nmax, dmax] {
    CheckResult c{"kfun.witness-validity", range(1, nmax, 0, dmax)};
    for (int64_t n = 1; n <= nmax; ++n) {
      c.record(kfun::valid_big_k_result(kfun::big_k(n), n), [&] { return tuple({{"K n", to_string(n)}}); });
      for (int64_t d = 0; d <= dmax; ++d) {
        c.record(kfun::valid_keq_result(t.keq.at(n, d), n, d),
                 [&] { return tuple({{"keq n", to_string(n)}, {"d", to_string(d)}}); });
        c.record(kfun::valid_kk_result(t.kk.at(n, d), n, Rational(d)),
                 [&] { return tuple({{"kk n", to_string(n)}, {"d", to_string(d)}}); });
        c.record(kfun::valid_kk_result(t.kk_half.at(n, d), n, Rational(2 * d + 1, 2)),
                 [&] { return tuple({{"kk n", to_string(n)}, {"d", to_string(2 * d + 1) + "/2"}}); });
      }
    }
    return c;
  });

  out.push_back([&t, nmax, dmax] {
    CheckResult c{"kfun.feasibility-window", range(1, nmax, 0, dmax)};
    for (int64_t n = 1; n <= nmax; ++n) {
      for (int64_t d = 0; d <= dmax; ++d) {
        const auto in = [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); };
        c.record(t.keq.at(n, d).value.is_finite() == (n <= d && d <= 2 * n - 1), in);
        c.record(t.kk.at(n, d).value.is_finite() == (d >= n), in);
        c.record(t.kk_half.at(n, d).value.is_finite() == (d >= n), in);
      }
    }
    return c;
  });

  out.push_back([&t, nmax, dmax] {
    CheckResult c{"prop.kk-monotone-in-d", range(1, nmax, 0, dmax)};
    for (int64_t n = 1; n <= nmax; ++n) {
      // Interleave integer and half-integer d: 0, 1/2, 1, 3/2, ...
      std::vector<std::pair<Rational, ExtNat>> seq;
      for (int64_t d = 0; d <= dmax; ++d) {
        seq.emplace_back(Rational(d), t.kk.at(n, d).value);
        seq.emplace_back(Rational(2 * d + 1, 2), t.kk_half.at(n, d).value);
      }
      for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
          c.record(seq[i].second >= seq[j].second, [&] {
            return tuple({{"n", to_string(n)}, {"d", seq[i].first.to_string()}, {"d'", seq[j].first.to_string()}});
          });
    }
    return c;
  });

  out.push_back([&t, nmax, dmax] {
    CheckResult c{"prop.keq-ge-kk", range(1, nmax, 0, dmax)};
    for (int64_t n = 1; n <= nmax; ++n)
      for (int64_t d = 0; d <= dmax; ++d)
        c.record(t.keq.at(n, d).value >= t.kk.at(n, d).value,
                 [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); });
    return c;
  });

  out.push_back([&t, nmax] {
    CheckResult c{"prop.collapse-at-d-eq-n", "n=1.." + to_string(nmax)};
    for (int64_t n = 1; n <= nmax; ++n) {
      const auto K = ExtNat::fin(t.K[n]);
      c.record(t.keq.at(n, n).value == K && t.kk.at(n, n).value == K, [&] { return tuple({{"n", to_string(n)}}); });
    }
    return c;
  });

  out.push_back([&t, nmax] {
    CheckResult c{"prop.four-square-bound", "n=1.." + to_string(nmax)};
    for (int64_t n = 1; n <= nmax; ++n)
      c.record(kfun::satisfies_four_square_bound(t.K[n], n), [&] { return tuple({{"n", to_string(n)}}); });
    return c;
  });

  out.push_back([&t, nmax] {
    CheckResult c{"kfun.four-square-construction", "n=0.." + to_string(nmax)};
    for (int64_t n = 0; n <= nmax; ++n) {
      const auto [a, b, cc, d] = kfun::four_square(n);
      const int64_t head = isqrt(n);
      const auto [p, q, r, s] = kfun::four_square(n - head * head);
      const bool ok = a * a + b * b + cc * cc + d * d == n && a >= b && b >= cc && cc >= d && d >= 0 &&
                      (n == 0 || t.K[n] <= head + p + q + r + s);
      c.record(ok, [&] { return tuple({{"n", to_string(n)}}); });
    }
    return c;
  });

  out.push_back([&t, nmax] {
    const int64_t hi = std::min<int64_t>(std::max<int64_t>(nmax, 1), 200);
    CheckResult c{"kfun.big-k-vs-exhaustive", "n=1.." + to_string(hi)};
    for (int64_t n = 1; n <= hi; ++n)
      c.record(t.K[n] == exhaustive_k(n, n), [&] { return tuple({{"n", to_string(n)}}); });
    return c;
  });

  out.push_back([&t, nmax, dmax] {
    CheckResult c{"prop.linear-bound", range(1, nmax, 0, dmax)};
    for (int64_t n = 1; n <= nmax; ++n)
      for (int64_t d = n; d <= std::min(2 * n - 1, t.keq.dmax()); ++d)
        c.record(t.keq.at(n, d).value <= ExtNat::fin(2 * n - d),
                 [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); });
    return c;
  });

  out.push_back([&t, nmax, dmax] {
    CheckResult c{"prop.sqrt-bound", range(9, nmax, 0, dmax)};
    for (int64_t n = 9; n <= nmax; ++n) {
      for (int64_t d = 0; d <= std::min(dmax, 2 * n); ++d) {
        if (!kfun::in_sqrt_bound_window(n, d)) continue;
        const auto w = kfun::sqrt_bound_witness(n, d);
        const auto& v = t.kk.at(n, d).value;
        const bool ok = v.is_finite() && kfun::below_sqrt_plus_three(v.value(), 2 * n - d) &&
                        kfun::below_sqrt_plus_three(w.cost(), 2 * n - d) && w.weight() >= n && w.dim() <= d &&
                        w.pairs().size() == 1 && w.pairs()[0].n >= w.pairs()[0].k;
        c.record(ok, [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); });
      }
    }
    return c;
  });

  out.push_back([&t, nmax, dmax] {
    CheckResult c{"prop.kk-subadditive", range(1, nmax, 0, dmax)};
    for (int64_t n = 1; n <= nmax; ++n)
      for (int64_t n2 = 1; n2 <= nmax; ++n2)
        for (int64_t d = 0; d <= dmax; ++d)
          for (int64_t d2 = 0; d2 <= dmax; ++d2)
            c.record(t.kk.at(n + n2, d + d2).value <= t.kk.at(n, d).value + t.kk.at(n2, d2).value, [&] {
              return tuple({{"n", to_string(n)}, {"n'", to_string(n2)}, {"d", to_string(d)}, {"d'", to_string(d2)}});
            });
    return c;
  });

  out.push_back([&t, nmax] {
    CheckResult c{"prop.divisor-bound", "n=1.." + to_string(nmax)};
    for (int64_t n = 1; n <= nmax; ++n) {
      for (int64_t k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        const int64_t d = 2 * n - k * k;
        const kfun::Decomposition w({kfun::Pair{k, n / k}});
        const bool ok = t.keq.at(n, d).value <= ExtNat::fin(k) && w.weight() == n && w.dim() == d;
        c.record(ok, [&] { return tuple({{"n", to_string(n)}, {"k", to_string(k)}}); });
      }
    }
    return c;
  });
}

void oracle_checks(const KfunTables& t, int64_t nmax, int64_t dmax, std::vector<CheckFn>& out) {
  const int64_t cap = kfun::oracle_cap_from_env();
  const int64_t nhi = std::min(nmax, cap);
  const int64_t dhi = std::min(dmax, 2 * cap);
  out.push_back([&t, nhi, dhi, cap] {
    CheckResult c{"oracle.keq", range(1, nhi, 0, dhi)};
    for (int64_t n = 1; n <= nhi; ++n)
      for (int64_t d = 0; d <= dhi; ++d)
        c.record(t.keq.at(n, d) == kfun::keq_naive(n, d, cap),
                 [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); });
    return c;
  });
  out.push_back([&t, nhi, dhi, cap] {
    CheckResult c{"oracle.kk", range(1, nhi, 0, dhi)};
    for (int64_t n = 1; n <= nhi; ++n) {
      for (int64_t d = 0; d <= dhi; ++d) {
        c.record(t.kk.at(n, d) == kfun::kk_naive(n, Rational(d), cap),
                 [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); });
        if (2 * d + 1 <= 4 * cap)
          c.record(t.kk_half.at(n, d) == kfun::kk_naive(n, Rational(2 * d + 1, 2), cap),
                   [&] { return tuple({{"n", to_string(n)}, {"d", to_string(2 * d + 1) + "/2"}}); });
      }
    }
    return c;
  });
}

spectra::ProductObject random_object(std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> small(1, 12), kind(0, 3), count(1, 4), dim(1, 4);
  auto area = [&] { return RatPi(Rational(small(rng), small(rng))); };
  std::vector<spectra::CoisotropicAtom> atoms;
  const int64_t m = count(rng);
  for (int64_t i = 0; i < m; ++i) {
    switch (kind(rng)) {
      case 0: atoms.push_back(spectra::CoisotropicAtom::sphere(dim(rng), area())); break;
      case 1: {
        const int64_t k = dim(rng);
        atoms.push_back(spectra::CoisotropicAtom::stiefel(k, k + dim(rng) - 1, area()));
        break;
      }
      case 2: atoms.push_back(spectra::CoisotropicAtom::closed("T", dim(rng), spectra::Spectrum::zero(), true)); break;
      default:
        atoms.push_back(spectra::CoisotropicAtom::closed("M", dim(rng), spectra::Spectrum::lattice(area()), false));
    }
  }
  return spectra::ProductObject(std::move(atoms));
}

std::vector<spectra::ProductObject> random_objects(std::size_t count) {
  std::mt19937_64 rng(0x5eed);
  std::vector<spectra::ProductObject> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_object(rng));
  return out;
}

void bounds_checks(const KfunTables& t, int64_t nmax, int64_t dmax, std::vector<CheckFn>& out) {
  out.push_back([nmax] {
    CheckResult c{"bounds.normalization", "n=1.." + to_string(nmax)};
    for (int64_t n = 1; n <= nmax; ++n) {
      const auto b = bounds::capacity_bounds(n, 2 * n - 1);
      c.record(b.lower() == ExtRat(RatPi::pi()) && b.upper() == ExtRat(RatPi::pi()),
               [&] { return tuple({{"n", to_string(n)}}); });
    }
    return c;
  });

  out.push_back([nmax, dmax] {
    CheckResult c{"bounds.interval-sanity", range(1, nmax, 0, dmax)};
    auto guarded = [&](auto&& make, auto&& describe) {
      bool ok = true;
      try {
        const bounds::BoundInterval b = make();
        ok = b.lower().is_inf() || b.upper().is_inf() || b.lower() <= b.upper();
      } catch (const std::logic_error&) {
        ok = false;
      }
      c.record(ok, describe);
    };
    for (int64_t n = 1; n <= nmax; ++n) {
      for (int64_t d = n; d <= 2 * n - 1; ++d)
        guarded([&] { return bounds::capacity_bounds(n, d); },
                [&] { return tuple({{"capacity n", to_string(n)}, {"d", to_string(d)}}); });
      for (int64_t d = n; n >= 2 && d <= dmax; ++d)
        guarded([&] { return bounds::squeeze_bounds(n, Rational(d)); },
                [&] { return tuple({{"squeeze n", to_string(n)}, {"d", to_string(d)}}); });
    }
    for (const auto& obj : random_objects(200))
      guarded([&] { return bounds::energy_bounds(obj); }, [&] { return tuple({{"energy", obj.to_string()}}); });
    return c;
  });

  out.push_back([&t, nmax, dmax] {
    CheckResult c{"bounds.squeeze-monotone", range(2, nmax, 0, dmax)};
    for (int64_t n = 2; n <= nmax; ++n) {
      for (int64_t d = n; d + 1 <= dmax; ++d) {
        const auto a = bounds::squeeze_bounds(n, Rational(d));
        const auto h = bounds::squeeze_bounds(n, Rational(2 * d + 1, 2));
        const auto b = bounds::squeeze_bounds(n, Rational(d + 1));
        c.record(a.lower() <= h.lower() && h.lower() <= b.lower(),
                 [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); });
      }
    }
    return c;
  });

  out.push_back([&t, nmax, dmax] {
    CheckResult c{"bounds.squeeze-collapse", range(2, nmax, 0, dmax)};
    for (int64_t n = 2; n <= nmax; ++n) {
      for (int64_t d = n; d <= dmax; ++d) {
        const auto b = bounds::squeeze_bounds(n, Rational(d));
        const bool kk_one = t.kk.at(n, d).value == ExtNat::fin(1);
        const bool ok = b.collapsed() == kk_one && (d < 2 * n - 1 || b.collapsed()) &&
                        (!b.collapsed() || b.lower() == ExtRat(RatPi::pi()));
        c.record(ok, [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); });
      }
    }
    return c;
  });

  out.push_back([&t, nmax] {
    CheckResult c{"bounds.lagrangian-strictness", "n=1.." + to_string(nmax)};
    for (int64_t n = 1; n <= nmax; ++n) {
      for (int64_t d = n; d <= 2 * n - 1; ++d) {
        const auto r = bounds::lagrangian_comparison(n, d);
        const int64_t k = t.keq.at(n, d).value.value();
        const bool claimed = d > n || n >= 4;
        const bool ok = r.c_l == RatPi(Rational(1, n)) && r.lower_a == RatPi(Rational(1, k)) && r.strict == (n > k) &&
                        (!claimed || r.strict) && (!r.strict || r.c_l < r.lower_a);
        c.record(ok, [&] { return tuple({{"n", to_string(n)}, {"d", to_string(d)}}); });
      }
    }
    return c;
  });

  out.push_back([] {
    CheckResult c{"bounds.energy-conformal", "200 random objects x 4 scales"};
    const Rational scales[] = {Rational(1, 2), Rational(2), Rational(3, 5), Rational(7)};
    for (const auto& obj : random_objects(200)) {
      const auto base = bounds::energy_bounds(obj);
      for (const Rational& s : scales) {
        const auto b = bounds::energy_bounds(obj.scaled(s));
        c.record(b.lower() == base.lower().scaled(s) && b.upper() == base.upper().scaled(s),
                 [&] { return tuple({{"object", obj.to_string()}, {"c", s.to_string()}}); });
      }
    }
    return c;
  });

  out.push_back([] {
    CheckResult c{"bounds.worked-examples", "(S^3)^2, (S^1)^2 x S^2"};
    const ExtRat pi = RatPi::pi();
    for (const char* expr : {"S(2;pi) x S(2;pi)", "S(1;pi) x S(1;pi) x C(S2,1;pi)"}) {
      const auto b = bounds::energy_bounds(spectra::parse_object(expr));
      c.record(b.lower() == pi && b.upper() == pi, [&] { return tuple({{"object", expr}}); });
    }
    return c;
  });

  out.push_back([] {
    CheckResult c{"spectra.sum-laws", "300 random lattice triples"};
    std::mt19937_64 rng(0xa11ce);
    std::uniform_int_distribution<int64_t> small(0, 12), den(1, 12);
    auto spectrum = [&] {
      const int64_t p = small(rng);
      return p == 0 ? spectra::Spectrum::zero() : spectra::Spectrum::lattice(RatPi(Rational(p, den(rng))));
    };
    for (int i = 0; i < 300; ++i) {
      const auto a = spectrum(), b = spectrum(), e = spectrum();
      using spectra::spectrum_sum;
      const bool ok = spectrum_sum(a, b) == spectrum_sum(b, a) &&
                      spectrum_sum(spectrum_sum(a, b), e) == spectrum_sum(a, spectrum_sum(b, e)) &&
                      spectrum_sum(a, a) == a && spectrum_sum(spectra::Spectrum::zero(), a) == a;
      c.record(ok, [&] { return tuple({{"a", a.to_string()}, {"b", b.to_string()}, {"c", e.to_string()}}); });
    }
    return c;
  });

  out.push_back([] {
    CheckResult c{"spectra.min-action-le-split", "200 random objects"};
    for (const auto& obj : random_objects(200))
      c.record(spectra::minimal_action(spectra::product_spectrum(obj)) <= spectra::split_min_action(obj),
               [&] { return tuple({{"object", obj.to_string()}}); });
    return c;
  });

  out.push_back([] {
    CheckResult c{"spectra.rescaling", "200 random objects x 3 scales"};
    const Rational scales[] = {Rational(1, 3), Rational(5, 2), Rational(4)};
    for (const auto& obj : random_objects(200)) {
      for (const Rational& s : scales) {
        const auto scaled = obj.scaled(s);
        const bool ok = spectra::split_min_action(scaled) == spectra::split_min_action(obj).scaled(s) &&
                        spectra::minimal_action(spectra::product_spectrum(scaled)) ==
                            spectra::minimal_action(spectra::product_spectrum(obj)).scaled(s);
        c.record(ok, [&] { return tuple({{"object", obj.to_string()}, {"c", s.to_string()}}); });
      }
    }
    return c;
  });

  out.push_back([] {
    CheckResult c{"spectra.sphere-independent-of-m", "m=1..12, 12 areas"};
    for (int64_t q = 1; q <= 12; ++q) {
      const RatPi a(Rational(q + 1, q));
      const auto ref = spectra::spectrum_of_atom(spectra::CoisotropicAtom::sphere(1, a));
      for (int64_t m = 1; m <= 12; ++m)
        c.record(spectra::spectrum_of_atom(spectra::CoisotropicAtom::sphere(m, a)) == ref,
                 [&] { return tuple({{"m", to_string(m)}, {"a", a.to_string()}}); });
    }
    return c;
  });

  out.push_back([] {
    CheckResult c{"spectra.normal-form", "200 random generator lists"};
    std::mt19937_64 rng(0xf00d);
    std::uniform_int_distribution<int64_t> num(0, 9), den(1, 9), len(1, 5);
    for (int i = 0; i < 200; ++i) {
      std::vector<RatPi> gens;
      for (int64_t j = len(rng); j > 0; --j) gens.emplace_back(Rational(num(rng), den(rng)));
      const auto s = spectra::Spectrum::generated_by(gens);
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(gens.front());
      std::vector<RatPi> again;
      if (!s.is_zero()) again.push_back(s.generator());
      const bool ok = spectra::Spectrum::generated_by(shuffled) == s && spectra::Spectrum::generated_by(again) == s;
      c.record(ok, [&] {
        std::string g;
        for (const auto& x : gens) g += (g.empty() ? "" : " ") + x.to_string();
        return tuple({{"generators", g}});
      });
    }
    return c;
  });
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.fail_count == 0; });
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "kfun-props") return Suite::kfun_props;
  if (name == "oracle") return Suite::oracle;
  if (name == "bounds-props") return Suite::bounds_props;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kfun_props: return "kfun-props";
    case Suite::oracle: return "oracle";
    case Suite::bounds_props: return "bounds-props";
    case Suite::all: return "all";
  }
  return "?";
}

VerifyReport run(Suite suite, int64_t nmax, int64_t dmax) {
  if (nmax < 1) throw OutOfRange("verify needs nmax >= 1, got " + to_string(nmax));
  if (dmax < 0) throw OutOfRange("verify needs dmax >= 0, got " + to_string(dmax));
  const auto start = std::chrono::steady_clock::now();

  const KfunTables tables(nmax, dmax);
  std::vector<CheckFn> checks;
  if (suite == Suite::kfun_props || suite == Suite::all) kfun_checks(tables, nmax, dmax, checks);
  if (suite == Suite::oracle || suite == Suite::all) oracle_checks(tables, nmax, dmax, checks);
  if (suite == Suite::bounds_props || suite == Suite::all) bounds_checks(tables, nmax, dmax, checks);

  std::vector<std::future<CheckResult>> running;
  running.reserve(checks.size());
  for (auto& fn : checks) running.push_back(std::async(std::launch::async, fn));

  VerifyReport report;
  for (auto& f : running) report.checks.push_back(f.get());
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace coisocap::verify
