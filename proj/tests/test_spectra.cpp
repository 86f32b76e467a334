#include <doctest.h>

#include <random>

#include "coisocap/errors.hpp"
#include "coisocap/spectra.hpp"

using namespace coisocap;
using namespace coisocap::spectra;

namespace {
RatPi pi_times(std::int64_t p, std::int64_t q = 1) { return RatPi(Rational(p, q)); }
}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational::parse(" 9/2 ") == Rational(9, 2));
  CHECK_THROWS_AS(Rational::parse("9/"), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), OutOfRange);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), OverflowError);
  CHECK_THROWS_AS(Rational::parse("99999999999999999999"), OverflowError);
  // gcd(p/q, r/s) = gcd(ps, rq)/(qs)
  CHECK(rational_gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
  CHECK(rational_gcd(Rational(2, 3), Rational(4, 9)) == Rational(2, 9));
  CHECK(rational_gcd(Rational(0), Rational(3, 4)) == Rational(3, 4));
}

TEST_CASE("area parsing in pi units") {
  CHECK(RatPi::parse("pi") == pi_times(1));
  CHECK(RatPi::parse("pi/2") == pi_times(1, 2));
  CHECK(RatPi::parse("2pi/3") == pi_times(2, 3));
  CHECK(RatPi::parse("2*pi") == pi_times(2));
  CHECK(RatPi::parse("3/4") == pi_times(3, 4));
  CHECK(RatPi::parse("0") == pi_times(0));
  CHECK_THROWS_AS(RatPi::parse("-pi"), ParseError);
  CHECK_THROWS_AS(RatPi::parse("-1"), OutOfRange);
  CHECK(pi_times(2, 3).to_string() == "2pi/3");
}

TEST_CASE("spectrum_of_atom") {
  CHECK(spectrum_of_atom(CoisotropicAtom::sphere(2, RatPi::pi())) == Spectrum::lattice(RatPi::pi()));
  CHECK(spectrum_of_atom(CoisotropicAtom::stiefel(2, 3, RatPi::pi())) == Spectrum::lattice(RatPi::pi()));
  CHECK(spectrum_of_atom(CoisotropicAtom::closed("T2", 1, Spectrum::zero(), true)).is_zero());
  CHECK(spectrum_of_atom(CoisotropicAtom::stiefel(2, 3, pi_times(5, 2))) == Spectrum::lattice(pi_times(5, 2)));
}

TEST_CASE("spectrum_sum and minimal_action") {
  const auto pi = Spectrum::lattice(RatPi::pi());
  CHECK(spectrum_sum(pi, pi) == pi);
  CHECK(spectrum_sum(Spectrum::lattice(pi_times(1, 2)), Spectrum::lattice(pi_times(1, 3))) ==
        Spectrum::lattice(pi_times(1, 6)));
  CHECK(spectrum_sum(Spectrum::zero(), Spectrum::lattice(pi_times(3, 7))) == Spectrum::lattice(pi_times(3, 7)));

  CHECK(minimal_action(Spectrum::zero()).is_inf());
  CHECK(minimal_action(pi) == ExtRat(RatPi::pi()));
  CHECK(minimal_action(Spectrum::lattice(pi_times(2, 3))) == ExtRat(pi_times(2, 3)));
}

TEST_CASE("product_spectrum and split_min_action") {
  const auto s2 = CoisotropicAtom::sphere(2, RatPi::pi());
  const auto torus = CoisotropicAtom::closed("T2", 1, Spectrum::zero(), true);
  CHECK(product_spectrum(ProductObject({s2, s2})) == Spectrum::lattice(RatPi::pi()));
  CHECK(product_spectrum(ProductObject({s2, torus})) == Spectrum::lattice(RatPi::pi()));
  CHECK(product_spectrum(ProductObject({CoisotropicAtom::sphere(2, pi_times(1, 2)),
                                        CoisotropicAtom::sphere(3, pi_times(1, 3))})) ==
        Spectrum::lattice(pi_times(1, 6)));

  CHECK(split_min_action(ProductObject({s2, s2})) == ExtRat(RatPi::pi()));
  CHECK(split_min_action(ProductObject({s2, CoisotropicAtom::sphere(3, pi_times(1, 2))})) ==
        ExtRat(pi_times(1, 2)));
  CHECK(split_min_action(ProductObject({s2, torus})) == ExtRat(RatPi::pi()));
  CHECK(split_min_action(ProductObject({torus})).is_inf());
}

TEST_CASE("atom invariants") {
  CHECK_THROWS_AS(CoisotropicAtom::stiefel(3, 2, RatPi::pi()), OutOfRange);
  CHECK_THROWS_AS(CoisotropicAtom::sphere(0, RatPi::pi()), OutOfRange);
  CHECK_THROWS_AS(CoisotropicAtom::sphere(1, pi_times(0)), OutOfRange);
  CHECK_THROWS_AS(CoisotropicAtom::closed("S2", 1, Spectrum::lattice(RatPi::pi()), true), OutOfRange);
  CHECK_THROWS_AS(ProductObject({}), OutOfRange);

  CHECK(CoisotropicAtom::sphere(2, RatPi::pi()).coiso_dim() == 3);
  CHECK(CoisotropicAtom::sphere(2, RatPi::pi()).ambient_half_dim() == 2);
  CHECK(CoisotropicAtom::stiefel(2, 3, RatPi::pi()).coiso_dim() == 8);
  CHECK(CoisotropicAtom::stiefel(2, 3, RatPi::pi()).ambient_half_dim() == 6);
  CHECK(CoisotropicAtom::closed("S2", 1, Spectrum::zero(), false).coiso_dim() == 2);
}

TEST_CASE("object expression grammar") {
  const auto obj = parse_object("S(2;pi) x V(2,3;pi/2) x C(T2,1;0;asph) x C(S2,1;2pi)");
  REQUIRE(obj.atoms().size() == 4);
  CHECK(obj.atoms()[0] == CoisotropicAtom::sphere(2, RatPi::pi()));
  CHECK(obj.atoms()[1] == CoisotropicAtom::stiefel(2, 3, pi_times(1, 2)));
  CHECK(obj.atoms()[2] == CoisotropicAtom::closed("T2", 1, Spectrum::zero(), true));
  CHECK(obj.atoms()[3] == CoisotropicAtom::closed("S2", 1, Spectrum::lattice(pi_times(2)), false));
  CHECK(obj.coiso_dim() == 3 + 8 + 2 + 2);
  CHECK(obj.ambient_half_dim() == 2 + 6 + 1 + 1);
  // to_string round-trips through the parser.
  CHECK(parse_object(obj.to_string()).to_string() == obj.to_string());

  CHECK_THROWS_AS(parse_object(""), ParseError);
  CHECK_THROWS_AS(parse_object("S(2;pi) x"), ParseError);
  CHECK_THROWS_AS(parse_object("Q(1;pi)"), ParseError);
  CHECK_THROWS_AS(parse_object("S(2,pi)"), ParseError);
  CHECK_THROWS_AS(parse_object("V(3,2;pi)"), ParseError);
  CHECK_THROWS_AS(parse_object("C(S2,1;pi;asph)"), ParseError);
  CHECK_THROWS_AS(parse_object("S(2;pi"), ParseError);
}

TEST_CASE("property: lattice algebra on random generators") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(0, 15), den(1, 15);
  auto random_spectrum = [&] {
    const auto p = num(rng);
    return p == 0 ? Spectrum::zero() : Spectrum::lattice(pi_times(p, den(rng)));
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = random_spectrum(), b = random_spectrum(), c = random_spectrum();
    CHECK(spectrum_sum(a, b) == spectrum_sum(b, a));
    CHECK(spectrum_sum(spectrum_sum(a, b), c) == spectrum_sum(a, spectrum_sum(b, c)));
    CHECK(spectrum_sum(a, a) == a);
    // Every generator is an integer multiple of the sum's generator.
    const auto s = spectrum_sum(a, b);
    for (const auto& x : {a, b}) {
      if (!x.is_zero()) CHECK((x.generator().in_pi_units() / s.generator().in_pi_units()).is_integer());
    }
  }
}

TEST_CASE("property: rescaling and min-action ordering") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> small(1, 9);
  for (int i = 0; i < 200; ++i) {
    std::vector<CoisotropicAtom> atoms = {
        CoisotropicAtom::sphere(small(rng), pi_times(small(rng), small(rng))),
        CoisotropicAtom::stiefel(1, 1 + small(rng), pi_times(small(rng), small(rng))),
        CoisotropicAtom::closed("M", 2, Spectrum::lattice(pi_times(small(rng), small(rng))), false)};
    const ProductObject obj(atoms);
    const Rational c(small(rng), small(rng));
    CHECK(split_min_action(obj.scaled(c)) == split_min_action(obj).scaled(c));
    CHECK(minimal_action(product_spectrum(obj.scaled(c))) == minimal_action(product_spectrum(obj)).scaled(c));
    CHECK(minimal_action(product_spectrum(obj)) <= split_min_action(obj));
  }
}
