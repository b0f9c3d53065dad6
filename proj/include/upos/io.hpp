#pragma once

#include <string>

#include <json.hpp>

#include "upos/decider.hpp"
#include "upos/harness.hpp"

namespace upos {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings "p/q" or "p"; JSON numbers are rejected.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);

/// {"recurrence": [...], "initial": [...]}
LRSRep lrs_from_json(const Json& j);
Json to_json(const LRSRep& u);

/// {"variables": s, "terms": [{"coeff": "...", "exponents": [...]}]}
PolyInstance poly_from_json(const Json& j);
Json to_json(const PolyInstance& f);

Json to_json(const Verdict& v);

/// Characteristic roots, closed-form coefficients and the decomposition
/// period of the minimized recurrence.
Json roots_report(const LRSRep& u);

/// Parses text; wraps syntax errors in InvalidInput.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace upos
