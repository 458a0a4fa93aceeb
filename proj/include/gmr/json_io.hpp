// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "gmr/lie.hpp"
#include "gmr/model.hpp"
#include "gmr/optimal_system.hpp"
#include "gmr/solutions.hpp"
#include "gmr/transform.hpp"
#include "gmr/verify.hpp"

namespace gmr {

// Flat object {"k":..., "alpha":..., "sigma":..., "lambda":...}.
nlohmann::json to_json(const ModelParams& p);
ModelParams model_params_from_json(const nlohmann::json& j);

// {"family":"...", "c1":..., "c2":..., "a":..., "params":{...}}; "a" is
// emitted only for families that read it, "c2" only for two-constant ones.
nlohmann::json to_json(const SolutionFamily& f);
SolutionFamily solution_family_from_json(const nlohmann::json& j);

// {"a":[a1..a6], "sigma":...}
nlohmann::json to_json(const lie::AlgebraElement& x);
lie::AlgebraElement algebra_element_from_json(const nlohmann::json& j);

// {"class":"...", "a":..., "scale":..., "word":[[i,eps],...]}
nlohmann::json to_json(const lie::OptimalRep& r);
lie::OptimalRep optimal_rep_from_json(const nlohmann::json& j);

// {"g": i, "eps": ...}
nlohmann::json point_map_to_json(const PointMap& m);
PointMap point_map_from_json(const nlohmann::json& j, const ModelParams& params);

nlohmann::json to_json(const verify::ResidualReport& r);
nlohmann::json to_json(const verify::McEstimate& e);
nlohmann::json to_json(const verify::SemigroupReport& r);

}  // namespace gmr
