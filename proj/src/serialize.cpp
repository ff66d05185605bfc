#include "infodesign/serialize.hpp"

#include "infodesign/errors.hpp"

namespace infodesign {

namespace {

const json& require(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw ValidationError(std::string("field '") + field + "': missing");
    return j.at(field);
}

double require_number(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_number())
        throw ValidationError(std::string("field '") + field + "': expected a number");
    return v.get<double>();
}

std::vector<double> require_numbers(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_array())
        throw ValidationError(std::string("field '") + field + "': expected an array");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number())
            throw ValidationError(std::string("field '") + field +
                                  "': expected numeric entries");
        out.push_back(x.get<double>());
    }
    return out;
}

std::string require_string(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_string())
        throw ValidationError(std::string("field '") + field + "': expected a string");
    return v.get<std::string>();
}

}  // namespace

json dist_to_json(const PosteriorDist& d) {
    return json{{"support", d.support}, {"weights", d.weights}};
}

PosteriorDist dist_from_json(const json& j) {
    try {
        return make_dist(require_numbers(j, "support"), require_numbers(j, "weights"));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("field 'support'/'weights': ") + e.what());
    }
}

json simplex_dist_to_json(const SimplexDist& d) {
    return json{{"support", d.support}, {"weights", d.weights}};
}

SimplexDist simplex_dist_from_json(const json& j) {
    const json& sup = require(j, "support");
    if (!sup.is_array() || sup.empty())
        throw ValidationError("field 'support': expected a non-empty array of vectors");
    std::vector<std::vector<double>> support;
    for (const auto& row : sup) {
        if (!row.is_array())
            throw ValidationError("field 'support': expected vector entries");
        support.push_back(row.get<std::vector<double>>());
    }
    try {
        return make_simplex_dist(std::move(support), require_numbers(j, "weights"));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("field 'support'/'weights': ") + e.what());
    }
}

DecisionProblem decision_problem_from_json(const json& j) {
    if (j.is_object() && j.contains("c_fp")) {
        CostPair c{require_number(j, "c_fp"), require_number(j, "c_fn")};
        try {
            return cost_pair_problem(c);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(std::string("field 'c_fp'/'c_fn': ") + e.what());
        }
    }
    const json& acts = require(j, "actions");
    const json& pay = require(j, "payoff");
    if (!acts.is_array() || !pay.is_array() || acts.size() != pay.size())
        throw ValidationError("field 'actions'/'payoff': mismatched arrays");
    std::vector<std::string> actions;
    std::vector<std::array<double, 2>> payoff;
    for (std::size_t i = 0; i < acts.size(); ++i) {
        if (!acts[i].is_string())
            throw ValidationError("field 'actions': expected strings");
        actions.push_back(acts[i].get<std::string>());
        if (!pay[i].is_array() || pay[i].size() != 2)
            throw ValidationError("field 'payoff': expected [u(a,0), u(a,1)] rows");
        payoff.push_back({pay[i][0].get<double>(), pay[i][1].get<double>()});
    }
    try {
        return make_decision_problem(std::move(actions), std::move(payoff));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("field 'payoff': ") + e.what());
    }
}

json generator_to_json(const Generator& g) {
    json comps = json::array();
    for (const auto& c : g.completions)
        comps.push_back(json{{"label", c.label},
                             {"base_prob", c.base_prob},
                             {"quality", c.quality},
                             {"spurious", c.spurious}});
    return json{{"prompt", g.prompt}, {"completions", comps}};
}

Generator generator_from_json(const json& j) {
    const json& comps = require(j, "completions");
    if (!comps.is_array() || comps.empty())
        throw ValidationError("field 'completions': expected a non-empty array");
    std::vector<Completion> out;
    for (const auto& c : comps) {
        Completion comp;
        comp.label = c.contains("label") ? c.at("label").get<std::string>() : "";
        comp.base_prob = require_number(c, "base_prob");
        comp.quality = require_numbers(c, "quality");
        comp.spurious = require_number(c, "spurious");
        out.push_back(std::move(comp));
    }
    std::string prompt = j.contains("prompt") ? j.at("prompt").get<std::string>() : "";
    try {
        return make_generator(std::move(out), std::move(prompt));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("field 'completions': ") + e.what());
    }
}

BayesRisk risk_from_json(const json& j) {
    std::string kind = require_string(j, "kind");
    if (kind == "log") return log_risk();
    if (kind == "brier") return brier_risk();
    if (kind == "weighted_ce")
        return weighted_ce_risk(require_number(j, "w0"), require_number(j, "w1"));
    if (kind == "quadratic") return quadratic_risk(require_number(j, "t"));
    throw ValidationError("field 'kind': unknown risk kind '" + kind + "'");
}

Friction friction_from_json(const json& j) {
    std::string kind = require_string(j, "kind");
    if (kind == "zero") return zero_friction();
    if (kind == "mutual_info") return mutual_info_friction(require_number(j, "kappa"));
    if (kind == "dispersion") return dispersion_friction(require_number(j, "lambda"));
    throw ValidationError("field 'kind': unknown friction kind '" + kind + "'");
}

RiskFamily family_from_json(const json& j) {
    std::string kind = require_string(j, "kind");
    if (kind == "quadratic") return quadratic_family();
    if (kind == "interpolated")
        return interpolated_family(risk_from_json(require(j, "h0")),
                                   risk_from_json(require(j, "h1")));
    throw ValidationError("field 'kind': unknown family kind '" + kind + "'");
}

}  // namespace infodesign
