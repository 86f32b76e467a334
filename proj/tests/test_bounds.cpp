#include <doctest.h>

#include "coisocap/bounds.hpp"
#include "coisocap/errors.hpp"

using namespace coisocap;
using namespace coisocap::bounds;

namespace {

RatPi pi_times(std::int64_t p, std::int64_t q = 1) { return RatPi(Rational(p, q)); }
const ExtRat kPi = RatPi::pi();

std::vector<std::string_view> ids(const std::vector<Citation>& prov) {
  std::vector<std::string_view> out;
  for (const auto& c : prov) out.push_back(c.id);
  return out;
}

bool has(const std::vector<Citation>& prov, std::string_view id) {
  for (const auto& c : prov)
    if (c.id == id) return true;
  return false;
}

}  // namespace

TEST_CASE("registry") {
  for (const auto& c : citation_registry()) {
    CHECK_FALSE(c.id.empty());
    CHECK_FALSE(c.statement.empty());
    CHECK(cite(c.id).statement == c.statement);
  }
  CHECK_THROWS_AS(cite("thm:made-up"), std::out_of_range);
}

TEST_CASE("energy_bounds worked examples") {
  const auto s3s3 = energy_bounds(spectra::parse_object("S(2;pi) x S(2;pi)"));
  CHECK(s3s3.lower() == kPi);
  CHECK(s3s3.upper() == kPi);
  CHECK(has(s3s3.lower_prov(), "cor:e-A-Cross"));
  CHECK(has(s3s3.lower_prov(), "eq:A-min"));
  CHECK(ids(s3s3.upper_prov()) == std::vector<std::string_view>{"rem:e-M-M'", "rem:e-Z-2n-a"});

  const auto torus_s2 = energy_bounds(spectra::parse_object("S(1;pi) x S(1;pi) x C(S2,1;pi)"));
  CHECK(torus_s2.lower() == kPi);
  CHECK(torus_s2.upper() == kPi);

  const auto mixed = energy_bounds(spectra::parse_object("S(2;2pi) x S(3;pi)"));
  CHECK(mixed.lower() == kPi);
  CHECK(mixed.upper() == kPi);
}

TEST_CASE("energy_bounds upper-bound conditions") {
  // Closed factor with smaller minimal area than every sphere: sharpness fails.
  const auto small_s2 = energy_bounds(spectra::parse_object("S(2;pi) x C(S2,1;pi/2)"));
  CHECK(small_s2.lower() == ExtRat(pi_times(1, 2)));
  CHECK(small_s2.upper().is_inf());
  CHECK(small_s2.upper_prov().empty());

  // Aspherical factor never blocks the bound.
  const auto with_torus = energy_bounds(spectra::parse_object("S(3;pi/3) x C(T2,1;0;asph)"));
  CHECK(with_torus.lower() == ExtRat(pi_times(1, 3)));
  CHECK(with_torus.upper() == ExtRat(pi_times(1, 3)));

  // Stiefel k >= 2 suppresses the sphere-based upper bound.
  const auto stiefel = energy_bounds(spectra::parse_object("S(2;pi) x V(2,3;pi)"));
  CHECK(stiefel.lower() == kPi);
  CHECK(stiefel.upper().is_inf());
  CHECK(has(stiefel.lower_prov(), "prop:A-Stiefel"));
  CHECK_FALSE(stiefel.notes().empty());

  // V(1,n,a) is a sphere.
  const auto v1 = energy_bounds(spectra::parse_object("V(1,4;pi/2)"));
  CHECK(v1.lower() == ExtRat(pi_times(1, 2)));
  CHECK(v1.upper() == ExtRat(pi_times(1, 2)));

  // No sphere: lower bound only.
  const auto closed_only = energy_bounds(spectra::parse_object("C(S2,1;pi)"));
  CHECK(closed_only.lower() == kPi);
  CHECK(closed_only.upper().is_inf());
}

TEST_CASE("capacity_bounds") {
  const auto a = capacity_bounds(4, 7);
  CHECK(a.lower() == kPi);
  CHECK(a.upper() == kPi);
  CHECK(a.collapsed());

  const auto b = capacity_bounds(4, 4);
  CHECK(b.lower() == ExtRat(pi_times(1, 2)));
  CHECK(b.upper() == kPi);
  CHECK(ids(b.lower_prov()) == std::vector<std::string_view>{"eq:A-coiso-d-B"});
  REQUIRE(b.witness().has_value());
  CHECK(b.witness()->to_string() == "[(2,2)]");

  CHECK_THROWS_AS(capacity_bounds(3, 2), OutOfRange);
  CHECK_THROWS_AS(capacity_bounds(3, 6), OutOfRange);
  for (int n = 1; n <= 30; ++n) CHECK(capacity_bounds(n, 2 * n - 1).collapsed());
}

TEST_CASE("squeeze_bounds") {
  const auto a = squeeze_bounds(9, Rational(9));
  CHECK(a.lower() == ExtRat(pi_times(1, 3)));
  CHECK(a.upper() == kPi);
  const auto b = squeeze_bounds(2, Rational(4));
  CHECK(b.lower() == kPi);
  CHECK(b.collapsed());
  const auto c = squeeze_bounds(4, Rational(4));
  CHECK(c.lower() == ExtRat(pi_times(1, 2)));
  CHECK(squeeze_bounds(4, Rational(9, 2)).lower() == ExtRat(pi_times(1, 2)));

  CHECK_THROWS_AS(squeeze_bounds(1, Rational(5)), OutOfRange);
  CHECK_THROWS_AS(squeeze_bounds(5, Rational(9, 2)), OutOfRange);
}

TEST_CASE("lagrangian_comparison") {
  const auto a = lagrangian_comparison(4, 4);
  CHECK(a.c_l == pi_times(1, 4));
  CHECK(a.lower_a == pi_times(1, 2));
  CHECK(a.strict);
  const auto b = lagrangian_comparison(2, 2);
  CHECK(b.c_l == pi_times(1, 2));
  CHECK(b.lower_a == pi_times(1, 2));
  CHECK_FALSE(b.strict);
  const auto c = lagrangian_comparison(5, 9);
  CHECK(c.c_l == pi_times(1, 5));
  CHECK(c.lower_a == RatPi::pi());
  CHECK(c.strict);
  CHECK_THROWS_AS(lagrangian_comparison(3, 6), OutOfRange);
  // d = n needs n >= 4 for strictness: n = 3 gives K(3) = 3.
  CHECK_FALSE(lagrangian_comparison(3, 3).strict);
}

TEST_CASE("width_energy_bound") {
  const auto a = width_energy_bound(pi_times(2), true);
  CHECK(a.lower() == ExtRat(pi_times(2)));
  CHECK(ids(a.lower_prov()) == std::vector<std::string_view>{"cor:e-w"});
  const auto b = width_energy_bound(RatPi::pi(), false);
  CHECK(b.lower() == kPi);
  CHECK(b.upper() == kPi);
  CHECK_THROWS_AS(width_energy_bound(pi_times(0), true), OutOfRange);
}

TEST_CASE("interval sanity is enforced") {
  CHECK_THROWS_AS(BoundInterval(kPi, {cite("cor:e-w")}, ExtRat(pi_times(1, 2)), {cite("rem:e-Z-2n-a")}),
                  std::logic_error);
  try {
    BoundInterval(kPi, {cite("cor:e-w")}, ExtRat(pi_times(1, 2)), {cite("rem:e-Z-2n-a")});
  } catch (const std::logic_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("cor:e-w") != std::string::npos);
    CHECK(msg.find("rem:e-Z-2n-a") != std::string::npos);
  }
  CHECK_THROWS_AS(BoundInterval(kPi, {}, ExtRat::inf(), {}), std::logic_error);
  CHECK_NOTHROW(BoundInterval(pi_times(0), {}, ExtRat::inf(), {}));
}

TEST_CASE("property: conformality and squeeze monotonicity") {
  const char* exprs[] = {"S(2;pi) x S(2;pi)", "S(1;2pi/3) x C(S2,1;pi)", "S(4;5/7) x C(T,2;0;asph)",
                         "V(2,3;pi) x S(2;pi/2)", "C(M,2;3pi/2)"};
  const Rational scales[] = {Rational(1, 2), Rational(3), Rational(5, 7)};
  for (const char* e : exprs) {
    const auto obj = spectra::parse_object(e);
    const auto base = energy_bounds(obj);
    for (const auto& c : scales) {
      const auto s = energy_bounds(obj.scaled(c));
      CHECK(s.lower() == base.lower().scaled(c));
      CHECK(s.upper() == base.upper().scaled(c));
    }
  }
  for (int n = 2; n <= 12; ++n) {
    ExtRat prev = RatPi(Rational(0));
    for (int twice_d = 2 * n; twice_d <= 6 * n; ++twice_d) {
      const auto b = squeeze_bounds(n, Rational(twice_d, 2));
      CHECK(prev <= b.lower());
      prev = b.lower();
      if (twice_d >= 2 * (2 * n - 1)) CHECK(b.collapsed());
    }
  }
}
