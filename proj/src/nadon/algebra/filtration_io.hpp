#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nadon/algebra/filtration.hpp"

namespace nadon {

// {"bundle": [a1,...], "k": int, "weights": ["p/q",...],
//  "subspaces": [[["p/q",...], ...], ...]}
WeightedFiltration filtration_from_json(const nlohmann::json& j);
nlohmann::json filtration_to_json(const WeightedFiltration& f);

// Accepts a single filtration object or an array of them.
std::vector<WeightedFiltration> corpus_from_json(const nlohmann::json& j);

// {"mna": "p/q", "j": int, "steps": [{"q", "rank", "degree"}], ...}
nlohmann::json invariants_to_json(const WeightedFiltration& f, const SheafInvariants& inv);

nlohmann::json saturation_to_json(const SaturationResult& s);

}  // namespace nadon
