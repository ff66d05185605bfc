#pragma once

#include <json.hpp>

#include "infodesign/beliefs.hpp"
#include "infodesign/decide.hpp"
#include "infodesign/learn.hpp"
#include "infodesign/risk.hpp"
#include "infodesign/rlhf.hpp"
#include "infodesign/simplex.hpp"

namespace infodesign {

using nlohmann::json;

// {"support": [...], "weights": [...]} <-> canonical PosteriorDist.
json dist_to_json(const PosteriorDist& d);
PosteriorDist dist_from_json(const json& j);

json simplex_dist_to_json(const SimplexDist& d);
SimplexDist simplex_dist_from_json(const json& j);

// {"actions": [...], "payoff": [[u(a,0), u(a,1)], ...]} or the cost
// shorthand {"c_fp": ..., "c_fn": ...}.
DecisionProblem decision_problem_from_json(const json& j);

json generator_to_json(const Generator& g);
Generator generator_from_json(const json& j);

// {"kind": "log" | "brier" | "weighted_ce" (w0, w1) | "quadratic" (t)}.
BayesRisk risk_from_json(const json& j);

// {"kind": "zero" | "mutual_info" (kappa) | "dispersion" (lambda)}.
Friction friction_from_json(const json& j);

// {"kind": "quadratic"} or {"kind": "interpolated", "h0": ..., "h1": ...}.
RiskFamily family_from_json(const json& j);

}  // namespace infodesign
