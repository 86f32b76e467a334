#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coisocap/kfun.hpp"
#include "coisocap/rational.hpp"
#include "coisocap/spectra.hpp"

namespace coisocap::bounds {

struct Citation {
  std::string_view id;
  std::string_view statement;
  friend bool operator==(const Citation& a, const Citation& b) { return a.id == b.id; }
};

// Every inequality the engine is allowed to invoke. Immutable.
const std::vector<Citation>& citation_registry();

// Throws std::out_of_range for ids missing from the registry.
const Citation& cite(std::string_view id);

// lower <= upper is enforced on construction; a violation means two cited
// results contradict each other and raises std::logic_error naming both chains.
class BoundInterval {
 public:
  BoundInterval(ExtRat lower, std::vector<Citation> lower_prov, ExtRat upper, std::vector<Citation> upper_prov,
                std::vector<std::string> notes = {}, std::optional<kfun::Decomposition> witness = std::nullopt);

  const ExtRat& lower() const { return lower_; }
  const ExtRat& upper() const { return upper_; }
  const std::vector<Citation>& lower_prov() const { return lower_prov_; }
  const std::vector<Citation>& upper_prov() const { return upper_prov_; }
  const std::vector<std::string>& notes() const { return notes_; }
  // Decomposition behind a kfun-derived endpoint, if any.
  const std::optional<kfun::Decomposition>& witness() const { return witness_; }

  bool collapsed() const { return lower_.is_finite() && lower_ == upper_; }

 private:
  ExtRat lower_;
  ExtRat upper_;
  std::vector<Citation> lower_prov_;
  std::vector<Citation> upper_prov_;
  std::vector<std::string> notes_;
  std::optional<kfun::Decomposition> witness_;
};

// Displacement energy of a product of spheres, Stiefel manifolds and closed
// factors inside the product of the ambient spaces.
BoundInterval energy_bounds(const spectra::ProductObject& obj);

// Regular coisotropic capacity of B^{2n}, n <= d <= 2n-1.
BoundInterval capacity_bounds(std::int64_t n, std::int64_t d);

// emb_d^{Z^{2n}}(B^{2n}) for n >= 2, d >= n.
BoundInterval squeeze_bounds(std::int64_t n, const Rational& d);

struct LagrangianComparison {
  RatPi c_l;      // Lagrangian capacity pi/n of the unit ball
  RatPi lower_a;  // pi / keq(n,d)
  bool strict;    // n > keq(n,d), so c_L < A_coiso^d
};

LagrangianComparison lagrangian_comparison(std::int64_t n, std::int64_t d);

// e(U x M', M x M') against the Gromov width of a ball of the given area.
BoundInterval width_energy_bound(RatPi ball_area, bool has_closed_aspherical_factor);

}  // namespace coisocap::bounds
