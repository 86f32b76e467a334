#include "coisocap/bounds.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "coisocap/errors.hpp"

namespace coisocap::bounds {

namespace {

std::string chain(const std::vector<Citation>& prov) {
  std::string out;
  for (const auto& c : prov) {
    if (!out.empty()) out += ", ";
    out += c.id;
  }
  return out.empty() ? "<trivial>" : out;
}

RatPi pi_over(std::int64_t q) { return RatPi(Rational(1, q)); }

}  // namespace

const std::vector<Citation>& citation_registry() {
  static const std::vector<Citation> registry = {
      {"cor:e-A-Cross", "e(X) >= A^coiso_x(X) in a bounded symplectic manifold"},
      {"eq:A-min", "A^coiso_x(prod S^{2n_i-1}(a_i) x prod M_i) >= min({a_i} u {A(M_i)})"},
      {"rmk:S-N-N'", "S(M x M', N x N') = S(M, N) + S(M', N')"},
      {"prop:A-Stiefel", "A(C^{k x n}, w0, V(k,n)) = pi, rescaled to area a"},
      {"rem:e-M-M'", "e(X x M', M x M') <= e(X, M)"},
      {"rem:e-Z-2n-a", "e(Z^{2n}(a), R^{2n}) <= a"},
      {"eq:A-coiso-d-B", "A^d_coiso(B^{2n}) >= pi / keq(n,d)"},
      {"eq:A-coiso-d-Z", "A^d_coiso(Z^{2n}) <= pi"},
      {"monotonicity:B-in-Z", "B^{2n} embeds in Z^{2n}, so A^d_coiso(B^{2n}) <= A^d_coiso(Z^{2n})"},
      {"thm:emb-d-B", "emb_d^{Z^{2n}}(B^{2n}) >= pi / kk(n,d) for n >= 2, d >= n"},
      {"def:emb-d", "emb_d^{Z^{2n}}(B^{2n}) <= pi by definition"},
      {"cor:e-w", "e(U x M', M x M') >= w(U) for aspherical M, M' with M bounded and M' closed"},
      {"cor:e-w-sharp", "equality in e(U x M') >= w(U) for U a ball with room B_{3r} around it"},
      {"eq:c-L", "c_L(B^{2n}) = pi / n"},
  };
  return registry;
}

const Citation& cite(std::string_view id) {
  const auto& reg = citation_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Citation& c) { return c.id == id; });
  if (it == reg.end()) throw std::out_of_range("unregistered citation id '" + std::string(id) + "'");
  return *it;
}

BoundInterval::BoundInterval(ExtRat lower, std::vector<Citation> lower_prov, ExtRat upper,
                             std::vector<Citation> upper_prov, std::vector<std::string> notes,
                             std::optional<kfun::Decomposition> witness)
    : lower_(lower),
      upper_(upper),
      lower_prov_(std::move(lower_prov)),
      upper_prov_(std::move(upper_prov)),
      notes_(std::move(notes)),
      witness_(std::move(witness)) {
  if (lower_.is_finite() && upper_.is_finite() && upper_ < lower_) {
    throw std::logic_error("contradictory bounds: lower " + lower_.to_string() + " [" + chain(lower_prov_) +
                           "] exceeds upper " + upper_.to_string() + " [" + chain(upper_prov_) + "]");
  }
  const bool trivial_lower = lower_.is_finite() && lower_.value().is_zero();
  if (lower_prov_.empty() && !trivial_lower) throw std::logic_error("nontrivial lower bound without provenance");
  if (upper_prov_.empty() && upper_.is_finite()) throw std::logic_error("finite upper bound without provenance");
}

BoundInterval energy_bounds(const spectra::ProductObject& obj) {
  std::vector<Citation> lower_prov = {cite("cor:e-A-Cross"), cite("eq:A-min")};
  std::vector<std::string> notes;

  bool has_stiefel = false;
  std::optional<RatPi> sphere_min;
  for (const auto& atom : obj.atoms()) {
    const RatPi* area = nullptr;
    if (auto* s = atom.as_sphere()) area = &s->area;
    if (auto* v = atom.as_stiefel()) {
      if (v->k == 1) {
        area = &v->area;  // V(1,n,a) is the sphere S^{2n-1}(a)
      } else {
        has_stiefel = true;
      }
    }
    if (area && (!sphere_min || *area < *sphere_min)) sphere_min = *area;
  }
  if (has_stiefel) {
    lower_prov.push_back(cite("prop:A-Stiefel"));
    notes.emplace_back("Stiefel spectrum taken as area*Z by rescaling; only its minimal action is certified");
    notes.emplace_back("no upper bound is derived for Stiefel factors with k >= 2");
  }
  if (obj.atoms().size() > 1) lower_prov.push_back(cite("rmk:S-N-N'"));

  const ExtRat lower = spectra::split_min_action(obj);

  ExtRat upper = ExtRat::inf();
  std::vector<Citation> upper_prov;
  if (!has_stiefel && sphere_min) {
    bool sharp = true;
    for (const auto& atom : obj.atoms()) {
      if (auto* c = atom.as_closed()) {
        if (ExtRat(*sphere_min) > spectra::minimal_action(c->spectrum)) sharp = false;
      }
    }
    if (sharp) {
      upper = *sphere_min;
      upper_prov = {cite("rem:e-M-M'"), cite("rem:e-Z-2n-a")};
    } else {
      notes.emplace_back("smallest sphere area exceeds the minimal area of a closed factor; no upper bound");
    }
  } else if (!sphere_min) {
    notes.emplace_back("no sphere factor; no upper bound");
  }
  return BoundInterval(lower, std::move(lower_prov), upper, std::move(upper_prov), std::move(notes));
}

BoundInterval capacity_bounds(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < n || d > 2 * n - 1) {
    throw OutOfRange("capacity bounds need n >= 1 and n <= d <= 2n-1, got (n, d) = (" + std::to_string(n) + ", " +
                     std::to_string(d) + ")");
  }
  const auto k = kfun::keq(n, d);
  return BoundInterval(pi_over(k.value.value()), {cite("eq:A-coiso-d-B")}, RatPi::pi(),
                       {cite("eq:A-coiso-d-Z"), cite("monotonicity:B-in-Z")},
                       {"keq(" + std::to_string(n) + "," + std::to_string(d) + ") = " + k.value.to_string()},
                       k.witness);
}

BoundInterval squeeze_bounds(std::int64_t n, const Rational& d) {
  if (n < 2 || d < Rational(n)) {
    throw OutOfRange("squeeze bounds need n >= 2 and d >= n, got (n, d) = (" + std::to_string(n) + ", " +
                     d.to_string() + ")");
  }
  const auto k = kfun::kk(n, d);
  return BoundInterval(pi_over(k.value.value()), {cite("thm:emb-d-B")}, RatPi::pi(), {cite("def:emb-d")},
                       {"kk(" + std::to_string(n) + "," + d.to_string() + ") = " + k.value.to_string()},
                       k.witness);
}

LagrangianComparison lagrangian_comparison(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < n || d > 2 * n - 1) {
    throw OutOfRange("Lagrangian comparison needs n >= 1 and n <= d <= 2n-1, got (n, d) = (" + std::to_string(n) +
                     ", " + std::to_string(d) + ")");
  }
  const std::int64_t k = kfun::keq(n, d).value.value();
  return {pi_over(n), pi_over(k), n > k};
}

BoundInterval width_energy_bound(RatPi ball_area, bool has_closed_aspherical_factor) {
  if (!ball_area.is_positive()) throw OutOfRange("ball area must be positive");
  std::vector<std::string> notes = {has_closed_aspherical_factor ? "M' closed aspherical" : "M' a point"};
  return BoundInterval(ball_area, {cite("cor:e-w")}, ball_area,
                       {cite("cor:e-w-sharp"), cite("rem:e-M-M'"), cite("rem:e-Z-2n-a")}, std::move(notes));
}

}  // namespace coisocap::bounds
