#include "coisocap/spectra.hpp"

#include <cctype>
#include <charconv>

#include "coisocap/errors.hpp"

namespace coisocap::spectra {

Spectrum Spectrum::lattice(RatPi generator) {
  if (!generator.is_positive()) throw OutOfRange("lattice generator must be positive");
  Spectrum s;
  s.generator_ = generator;
  return s;
}

Spectrum Spectrum::generated_by(std::span<const RatPi> generators) {
  Rational g(0);
  for (const RatPi& a : generators) g = rational_gcd(g, a.in_pi_units());
  return g.is_zero() ? zero() : lattice(RatPi(g));
}

const RatPi& Spectrum::generator() const {
  if (!generator_) throw OutOfRange("generator() on the zero spectrum");
  return *generator_;
}

Spectrum Spectrum::scaled(const Rational& c) const {
  if (!c.is_positive()) throw OutOfRange("scale factor must be positive");
  return generator_ ? lattice(generator_->scaled(c)) : zero();
}

std::string Spectrum::to_string() const {
  return generator_ ? generator_->to_string() + "*Z" : "{0}";
}

Spectrum spectrum_sum(const Spectrum& a, const Spectrum& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Spectrum::lattice(RatPi(rational_gcd(a.generator().in_pi_units(), b.generator().in_pi_units())));
}

ExtRat minimal_action(const Spectrum& s) {
  return s.is_zero() ? ExtRat::inf() : ExtRat(s.generator());
}

CoisotropicAtom CoisotropicAtom::sphere(std::int64_t m, RatPi area) {
  if (m < 1) throw OutOfRange("sphere S(m;a) needs m >= 1, got " + std::to_string(m));
  if (!area.is_positive()) throw OutOfRange("sphere area must be positive");
  return CoisotropicAtom(Sphere{m, area});
}

CoisotropicAtom CoisotropicAtom::stiefel(std::int64_t k, std::int64_t n, RatPi area) {
  if (k < 1 || n < k)
    throw OutOfRange("Stiefel V(k,n;a) needs 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  if (!area.is_positive()) throw OutOfRange("Stiefel area must be positive");
  return CoisotropicAtom(Stiefel{k, n, area});
}

CoisotropicAtom CoisotropicAtom::closed(std::string label, std::int64_t half_dim, Spectrum spectrum, bool aspherical) {
  if (half_dim < 1) throw OutOfRange("closed factor needs half_dim >= 1");
  if (aspherical && !spectrum.is_zero())
    throw OutOfRange("aspherical closed factor '" + label + "' must have the zero spectrum");
  return CoisotropicAtom(Closed{std::move(label), half_dim, spectrum, aspherical});
}

std::int64_t CoisotropicAtom::coiso_dim() const {
  if (auto* s = as_sphere()) return 2 * s->m - 1;
  if (auto* v = as_stiefel()) return checked_mul(v->k, 2 * v->n - v->k);
  return 2 * as_closed()->half_dim;
}

std::int64_t CoisotropicAtom::ambient_half_dim() const {
  if (auto* s = as_sphere()) return s->m;
  if (auto* v = as_stiefel()) return checked_mul(v->k, v->n);
  return as_closed()->half_dim;
}

CoisotropicAtom CoisotropicAtom::scaled(const Rational& c) const {
  if (!c.is_positive()) throw OutOfRange("scale factor must be positive");
  if (auto* s = as_sphere()) return sphere(s->m, s->area.scaled(c));
  if (auto* v = as_stiefel()) return stiefel(v->k, v->n, v->area.scaled(c));
  const Closed& m = *as_closed();
  return closed(m.label, m.half_dim, m.spectrum.scaled(c), m.aspherical);
}

std::string CoisotropicAtom::to_string() const {
  if (auto* s = as_sphere()) return "S(" + std::to_string(s->m) + ";" + s->area.to_string() + ")";
  if (auto* v = as_stiefel())
    return "V(" + std::to_string(v->k) + "," + std::to_string(v->n) + ";" + v->area.to_string() + ")";
  const Closed& m = *as_closed();
  std::string out = "C(" + m.label + "," + std::to_string(m.half_dim) + ";" +
                    (m.spectrum.is_zero() ? std::string("0") : m.spectrum.generator().to_string());
  if (m.aspherical) out += ";asph";
  return out + ")";
}

ProductObject::ProductObject(std::vector<CoisotropicAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw OutOfRange("product object needs at least one atom");
}

std::int64_t ProductObject::coiso_dim() const {
  std::int64_t s = 0;
  for (const auto& a : atoms_) s = checked_add(s, a.coiso_dim());
  return s;
}

std::int64_t ProductObject::ambient_half_dim() const {
  std::int64_t s = 0;
  for (const auto& a : atoms_) s = checked_add(s, a.ambient_half_dim());
  return s;
}

ProductObject ProductObject::scaled(const Rational& c) const {
  std::vector<CoisotropicAtom> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.scaled(c));
  return ProductObject(std::move(out));
}

std::string ProductObject::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += " x ";
    out += atoms_[i].to_string();
  }
  return out;
}

Spectrum spectrum_of_atom(const CoisotropicAtom& atom) {
  // Spheres and Stiefel manifolds: area*Z (the Stiefel case rescales the a = pi lattice).
  if (auto* s = atom.as_sphere()) return Spectrum::lattice(s->area);
  if (auto* v = atom.as_stiefel()) return Spectrum::lattice(v->area);
  return atom.as_closed()->spectrum;
}

Spectrum product_spectrum(const ProductObject& obj) {
  Spectrum s;
  for (const auto& a : obj.atoms()) s = spectrum_sum(s, spectrum_of_atom(a));
  return s;
}

ExtRat split_min_action(const ProductObject& obj) {
  ExtRat best = ExtRat::inf();
  for (const auto& a : obj.atoms()) best = min(best, minimal_action(spectrum_of_atom(a)));
  return best;
}

// ---------------------------------------------------------------------------
// Expression grammar

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::int64_t parse_positive(std::string_view s, std::string_view atom) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
    throw ParseError("expected a positive integer, got '" + std::string(s) + "' in '" + std::string(atom) + "'");
  return v;
}

RatPi parse_area(std::string_view s, std::string_view atom) {
  try {
    return RatPi::parse(s);
  } catch (const OutOfRange& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(atom) + "'");
  }
}

CoisotropicAtom parse_atom(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() < 4 || t[1] != '(' || t.back() != ')')
    throw ParseError("malformed atom '" + std::string(t) + "', expected S(..), V(..) or C(..)");
  const char head = t[0];
  const auto sections = split(t.substr(2, t.size() - 3), ';');
  try {
    switch (head) {
      case 'S': {
        if (sections.size() != 2) throw ParseError("sphere atom must look like S(m;area): '" + std::string(t) + "'");
        return CoisotropicAtom::sphere(parse_positive(sections[0], t), parse_area(sections[1], t));
      }
      case 'V': {
        if (sections.size() != 2) throw ParseError("Stiefel atom must look like V(k,n;area): '" + std::string(t) + "'");
        const auto dims = split(sections[0], ',');
        if (dims.size() != 2) throw ParseError("Stiefel atom needs k,n: '" + std::string(t) + "'");
        return CoisotropicAtom::stiefel(parse_positive(dims[0], t), parse_positive(dims[1], t),
                                        parse_area(sections[1], t));
      }
      case 'C': {
        if (sections.size() < 2 || sections.size() > 3)
          throw ParseError("closed atom must look like C(label,halfdim;gen|0[;asph]): '" + std::string(t) + "'");
        const auto head_fields = split(sections[0], ',');
        if (head_fields.size() != 2 || head_fields[0].empty())
          throw ParseError("closed atom needs label,halfdim: '" + std::string(t) + "'");
        const RatPi gen = parse_area(sections[1], t);
        bool aspherical = false;
        if (sections.size() == 3) {
          if (sections[2] == "asph") aspherical = true;
          else if (!sections[2].empty()) throw ParseError("unknown closed-atom flag '" + std::string(sections[2]) + "'");
        }
        Spectrum spectrum = gen.is_zero() ? Spectrum::zero() : Spectrum::lattice(gen);
        return CoisotropicAtom::closed(std::string(head_fields[0]), parse_positive(head_fields[1], t), spectrum,
                                       aspherical);
      }
      default:
        throw ParseError("unknown atom kind '" + std::string(1, head) + "' in '" + std::string(t) + "'");
    }
  } catch (const OutOfRange& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

ProductObject parse_object(std::string_view text) {
  std::vector<CoisotropicAtom> atoms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\0';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
    if (i == text.size() || (depth == 0 && c == 'x')) {
      std::string_view piece = trim(text.substr(start, i - start));
      if (piece.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
      atoms.push_back(parse_atom(piece));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
  return ProductObject(std::move(atoms));
}

}  // namespace coisocap::spectra
