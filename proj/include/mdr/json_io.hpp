#pragma once

#include <string>

#include "json.hpp"
#include "mdr/correspondence.hpp"
#include "mdr/derham.hpp"
#include "mdr/fincat.hpp"
#include "mdr/motive.hpp"
#include "mdr/site.hpp"

namespace mdr {

using nlohmann::json;

// scheme: {"label", "vars": [...], "eqs": [poly], "invert": [poly]}
AffineCurveScheme scheme_from_json(const json& j);
json scheme_to_json(const AffineCurveScheme& s);

// correspondence: {"source": scheme, "target": scheme,
//                  "components": [{"ideal": [poly], "mult": n}]}
FiniteCorrespondence correspondence_from_json(const json& j);
json correspondence_to_json(const FiniteCorrespondence& c);

// form: {"degree": p, "terms": [{"coeff": rf-string, "wedge": ["dx"]}]}
// on a one-coordinate scheme; wedge entries are d<var> names.
Form form_from_json(const json& j, const AffineCurveScheme& on);
json form_to_json(const Form& f, const std::string& var);

// divisor: {"model": "P1", "points": [{"ideal": "z-1"} | {"ideal": "inf"}]}
LogDivisor divisor_from_json(const json& j);

json record_to_json(const CohomologyRecord& r);
std::string record_to_text(const CohomologyRecord& r);

// site: {"points": [...], "leq": [[a, b], ...]} (names or indices)
FiniteSite site_from_json(const json& j);
// presheaf: {"constant": rank} or {"dims": {"a,b": d}, "restrictions":
// {"a,b|b": [[..]]}} with opens keyed by comma-joined point names.
Presheaf presheaf_from_json(const json& j, const FiniteSite& site);

// category: {"objects": [...], "arrows": [{"name","src","dst"}],
//            "identities": ["ia", ...], "comp": {"g,f": "h"}}
FiniteCategory category_from_json(const json& j);

// motive: {"schemes": {label: scheme}, "terms": {"0": [term]},
//          "d": {"0": [[entry]]}, "twist": n, "shift": s}
// term: {"kind": "affine"|"p1"|"affine_times_line", "scheme": label}
// entry: 0 or {"kind": "corr"|"to_point"|"line_projection",
//              "corr": correspondence, "scale": n}
MotiveComplex motive_from_json(const json& j);

json realization_to_json(const RealizationResult& r);
std::string realization_to_text(const RealizationResult& r);

}  // namespace mdr
