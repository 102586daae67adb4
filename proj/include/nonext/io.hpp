#pragma once

#include <string>

#include <json.hpp>

#include "nonext/axioms.hpp"
#include "nonext/deformation.hpp"
#include "nonext/simplex.hpp"

namespace nonext::io {

using Json = nlohmann::ordered_json;

// Family spec schema:
//   {"phi":   {"kind": "tsallis_phi"},
//    "alpha": {"kind": "one_minus_q_alpha"},
//    "k": 1.0,
//    "validation": "strict"}            (optional, or "permissive")
//
// Function kinds and their parameters:
//   tsallis_phi, negated_phi, one_minus_q_alpha      (none)
//   power_phi, power_alpha                           "gamma" > 0
//   constant                                         "value"
//   weierstrass_phi                                  "a", "b" (odd integer), "eps" (default 1e-12)
//   tabulated                                        "points": [[q, value], ...]

/// Parse errors name the offending field, e.g. "alpha.gamma".
EntropyFamily family_from_json(const Json& j);
Json family_to_json(const EntropyFamily& f);
DeformationFunction function_from_json(const Json& j, const std::string& field);
Json function_to_json(const DeformationFunction& f);

Distribution distribution_from_json(const Json& j, NormalizeMode mode = NormalizeMode::strict);
Refinement refinement_from_json(const Json& j, NormalizeMode mode = NormalizeMode::strict);

Json config_to_json(const CheckConfig& c);
Json record_to_json(const CheckRecord& r);

/// {"family": ..., "family_id": ..., "config": ..., "classification": ..., "checks": [...]}
Json report_to_json(const AxiomReport& r);

/// Reads and parses a JSON file; ParseError if unreadable or malformed.
Json read_json_file(const std::string& path);

/// Serialized text with trailing newline. Non-finite numbers become null.
std::string dump(const Json& j);

}  // namespace nonext::io
