#pragma once

#include <json.hpp>

#include "coisocap/bounds.hpp"
#include "coisocap/kfun.hpp"
#include "coisocap/rational.hpp"
#include "coisocap/spectra.hpp"
#include "coisocap/verify.hpp"

// Frozen output schema: rationals are {"num","den","unit":"pi"}, infinity is
// the string "inf", witnesses are arrays of [k, n].
namespace coisocap::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const RatPi& r);
Json to_json(const ExtRat& r);
Json to_json(const ExtNat& v);
Json to_json(const kfun::Decomposition& d);
Json witness_json(const std::optional<kfun::Decomposition>& d);
Json to_json(const spectra::Spectrum& s);
Json to_json(const std::vector<bounds::Citation>& prov);
Json to_json(const verify::CheckResult& c);

// Top-level documents.
Json value_document(const std::string& query, Json value, Json witness, Json notes = Json::array());
Json interval_document(const std::string& query, const bounds::BoundInterval& b);

}  // namespace coisocap::json_io
