#include "coisocap/json_io.hpp"

namespace coisocap::json_io {

Json to_json(const RatPi& r) {
  return Json{{"num", r.in_pi_units().num()}, {"den", r.in_pi_units().den()}, {"unit", "pi"}};
}

Json to_json(const ExtRat& r) { return r.is_inf() ? Json("inf") : to_json(r.value()); }

Json to_json(const ExtNat& v) { return v.is_inf() ? Json("inf") : Json(v.value()); }

Json to_json(const kfun::Decomposition& d) {
  Json out = Json::array();
  for (const auto& p : d.pairs()) out.push_back(Json::array({p.k, p.n}));
  return out;
}

Json witness_json(const std::optional<kfun::Decomposition>& d) { return d ? to_json(*d) : Json(nullptr); }

Json to_json(const spectra::Spectrum& s) {
  if (s.is_zero()) return Json{{"kind", "zero"}};
  return Json{{"kind", "lattice"}, {"generator", to_json(s.generator())}};
}

Json to_json(const std::vector<bounds::Citation>& prov) {
  Json out = Json::array();
  for (const auto& c : prov) out.push_back(Json{{"id", c.id}, {"statement", c.statement}});
  return out;
}

Json to_json(const verify::CheckResult& c) {
  return Json{{"name", c.name},
              {"range", c.range},
              {"pass_count", c.pass_count},
              {"fail_count", c.fail_count},
              {"first_failure", c.first_failure ? Json(*c.first_failure) : Json(nullptr)}};
}

Json value_document(const std::string& query, Json value, Json witness, Json notes) {
  return Json{{"query", query},
              {"value", std::move(value)},
              {"witness", std::move(witness)},
              {"provenance", Json::array()},
              {"notes", std::move(notes)}};
}

Json interval_document(const std::string& query, const bounds::BoundInterval& b) {
  return Json{{"query", query},
              {"interval", Json{{"lower", to_json(b.lower())}, {"upper", to_json(b.upper())}}},
              {"witness", witness_json(b.witness())},
              {"provenance", Json{{"lower", to_json(b.lower_prov())}, {"upper", to_json(b.upper_prov())}}},
              {"notes", b.notes()}};
}

}  // namespace coisocap::json_io
