#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "infodesign/beliefs.hpp"

namespace infodesign {

// One declarative scenario per file: a kind, kind-specific parameters, an
// output path and a seed that is recorded in every emitted CSV.
struct Scenario {
    std::string kind;
    std::string name;
    std::uint64_t seed = 0;
    nlohmann::json params;
    std::string out;  // default "<name>.csv"
};

Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario_file(const std::string& path);

// Renders the scenario deterministically to CSV text (built fully in
// memory; nothing is written on validation failure).
std::string run_scenario_to_csv(const Scenario& s);

// Writes the CSV next to `out` (or into out_dir when given); returns the
// path written.
std::string run_scenario(const Scenario& s, const std::string& out_dir = "");

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
Scenario builtin_scenario(const std::string& name);

// Stop-loss diagnostic matrix: rows k, one column per distribution, then a
// verdict row per adjacent pair (pointwise order or first crossing k).
std::string stop_loss_diagnostic_csv(const std::vector<PosteriorDist>& dists,
                                     const std::vector<double>& k_grid);

}  // namespace infodesign
