#pragma once

#include <json.hpp>

#include "picod/bounds.hpp"
#include "picod/characterize.hpp"
#include "picod/exact.hpp"
#include "picod/instance.hpp"
#include "picod/schemes.hpp"

namespace picod {

// Instance file: {"m": <int>, "clients": [[<ints>], ...]}, 1-based indices.
// Duplicate client sets are collapsed (first occurrence wins) with a warning.
PicodInstance instance_from_json(const nlohmann::json&, std::vector<std::string>* warnings = nullptr);
PicodInstance parse_instance(const std::string& text, std::vector<std::string>* warnings = nullptr);
nlohmann::json to_json(const PicodInstance&);

// Scheme file: {"q": <prime>, "rows": [[<ints mod q>], ...]}.
LinearScheme scheme_from_json(const nlohmann::json&);
LinearScheme parse_scheme(const std::string& text);
nlohmann::json to_json(const LinearScheme&);

nlohmann::json to_json(const NestedCollection&);
nlohmann::json demand_to_json(const DemandFunction&);
nlohmann::json to_json(const BoundReport&);
nlohmann::json to_json(const ExactResult&);
nlohmann::json to_json(const SmallCaseResult&);
nlohmann::json to_json(const CrosscheckReport&);

}  // namespace picod
