#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coisocap/rational.hpp"

namespace coisocap::spectra {

// Additive subgroup of R in pi-units: either {0} or g*Z with g > 0.
class Spectrum {
 public:
  Spectrum() = default;  // Zero

  static Spectrum zero() { return {}; }
  static Spectrum lattice(RatPi generator);
  // Subgroup generated by the given nonnegative areas.
  static Spectrum generated_by(std::span<const RatPi> generators);

  bool is_zero() const { return !generator_.has_value(); }
  const RatPi& generator() const;

  Spectrum scaled(const Rational& c) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

  std::string to_string() const;  // "{0}" or "pi/2*Z"

 private:
  std::optional<RatPi> generator_;
};

Spectrum spectrum_sum(const Spectrum& a, const Spectrum& b);

// inf of the positive part; Inf for {0}.
ExtRat minimal_action(const Spectrum& s);

// S^{2m-1}(a) in R^{2m}.
struct Sphere {
  std::int64_t m = 1;
  RatPi area;
  friend bool operator==(const Sphere&, const Sphere&) = default;
};

// V(k,n,a) in C^{k x n}.
struct Stiefel {
  std::int64_t k = 1;
  std::int64_t n = 1;
  RatPi area;
  friend bool operator==(const Stiefel&, const Stiefel&) = default;
};

// Closed symplectic factor with a user-declared sphere spectrum.
struct Closed {
  std::string label;
  std::int64_t half_dim = 1;
  Spectrum spectrum;
  bool aspherical = false;
  friend bool operator==(const Closed&, const Closed&) = default;
};

class CoisotropicAtom {
 public:
  using Kind = std::variant<Sphere, Stiefel, Closed>;

  static CoisotropicAtom sphere(std::int64_t m, RatPi area);
  static CoisotropicAtom stiefel(std::int64_t k, std::int64_t n, RatPi area);
  static CoisotropicAtom closed(std::string label, std::int64_t half_dim, Spectrum spectrum, bool aspherical);

  const Kind& kind() const { return kind_; }
  const Sphere* as_sphere() const { return std::get_if<Sphere>(&kind_); }
  const Stiefel* as_stiefel() const { return std::get_if<Stiefel>(&kind_); }
  const Closed* as_closed() const { return std::get_if<Closed>(&kind_); }

  std::int64_t coiso_dim() const;
  std::int64_t ambient_half_dim() const;

  // Multiplies every area (and a closed factor's spectrum) by c > 0.
  CoisotropicAtom scaled(const Rational& c) const;

  friend bool operator==(const CoisotropicAtom&, const CoisotropicAtom&) = default;

  std::string to_string() const;  // expression grammar form

 private:
  explicit CoisotropicAtom(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

class ProductObject {
 public:
  explicit ProductObject(std::vector<CoisotropicAtom> atoms);

  const std::vector<CoisotropicAtom>& atoms() const { return atoms_; }
  std::int64_t coiso_dim() const;
  std::int64_t ambient_half_dim() const;
  ProductObject scaled(const Rational& c) const;

  std::string to_string() const;

 private:
  std::vector<CoisotropicAtom> atoms_;
};

Spectrum spectrum_of_atom(const CoisotropicAtom& atom);
Spectrum product_spectrum(const ProductObject& obj);

// Finest splitting value min_i A(N_i); a lower bound for the split minimal
// action of the product.
ExtRat split_min_action(const ProductObject& obj);

// Parses `S(m;area)`, `V(k,n;area)`, `C(label,halfdim;gen|0[;asph])` joined by `x`.
ProductObject parse_object(std::string_view text);

}  // namespace coisocap::spectra
