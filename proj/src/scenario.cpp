#include "infodesign/scenario.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "infodesign/attention.hpp"
#include "infodesign/common.hpp"
#include "infodesign/decide.hpp"
#include "infodesign/errors.hpp"
#include "infodesign/learn.hpp"
#include "infodesign/rlhf.hpp"
#include "infodesign/serialize.hpp"
#include "infodesign/simplex.hpp"

namespace infodesign {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class Csv {
public:
    explicit Csv(const Scenario& s) {
        out_ << "# scenario=" << s.name << " version=" << kVersion
             << " seed=" << s.seed << "\n";
    }

    void comment(const std::string& text) { out_ << "# " << text << "\n"; }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ",";
            out_ << cells[i];
        }
        out_ << "\n";
    }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

const json& param(const Scenario& s, const char* field) {
    if (!s.params.is_object() || !s.params.contains(field))
        throw ValidationError(std::string("field 'params.") + field + "': missing");
    return s.params.at(field);
}

double param_number(const Scenario& s, const char* field) {
    const json& v = param(s, field);
    if (!v.is_number())
        throw ValidationError(std::string("field 'params.") + field +
                              "': expected a number");
    return v.get<double>();
}

std::vector<double> param_numbers(const Scenario& s, const char* field) {
    const json& v = param(s, field);
    if (!v.is_array() || v.empty())
        throw ValidationError(std::string("field 'params.") + field +
                              "': expected a non-empty numeric array");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number())
            throw ValidationError(std::string("field 'params.") + field +
                                  "': expected numeric entries");
        out.push_back(x.get<double>());
    }
    return out;
}

int optional_int(const Scenario& s, const char* field, int fallback) {
    if (!s.params.is_object() || !s.params.contains(field)) return fallback;
    return s.params.at(field).get<int>();
}

std::string run_solve_learning(const Scenario& s) {
    LearningProblem p{risk_from_json(param(s, "risk")),
                      friction_from_json(param(s, "friction")),
                      param_number(s, "mu"), optional_int(s, "grid_n", 401)};
    Solution sol = solve_two_point(p);

    Csv csv(s);
    csv.comment("objective=" + fmt(sol.objective_value) +
                " friction_cost=" + fmt(p.friction.eval(sol.dist)) +
                " method=" + sol.method + " mean=" + fmt(sol.dist.mean()) +
                " second_moment=" + fmt(sol.dist.second_moment()));
    csv.row({"atom", "q", "weight"});
    for (std::size_t i = 0; i < sol.dist.size(); ++i)
        csv.row({std::to_string(i), fmt(sol.dist.support[i]), fmt(sol.dist.weights[i])});
    return csv.str();
}

std::string run_contraction_sweep(const Scenario& s) {
    RiskFamily family = family_from_json(param(s, "family"));
    Friction friction = friction_from_json(param(s, "friction"));
    double mu = param_number(s, "mu");
    std::vector<double> ts = param_numbers(s, "ts");
    SweepReport rep;
    try {
        rep = contraction_sweep(family, friction, mu, ts, optional_int(s, "grid_n", 401));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("field 'params.ts'/'params.mu': ") + e.what());
    }

    Csv csv(s);
    csv.comment(std::string("chain_ok=") + (rep.chain_ok ? "true" : "false"));
    csv.row({"t", "q_high", "second_moment", "objective", "friction_cost", "chain_ok"});
    for (const auto& e : rep.entries) {
        bool ok = e.vs_prev == CxOrder::ADominates || e.vs_prev == CxOrder::Equal;
        csv.row({fmt(e.t), fmt(e.solution.q_high()), fmt(e.solution.dist.second_moment()),
                 fmt(e.solution.objective_value), fmt(e.friction_cost),
                 ok ? "true" : "false"});
    }
    return csv.str();
}

std::string run_compare_losses(const Scenario& s) {
    BayesRisk h0 = risk_from_json(param(s, "h0"));
    BayesRisk h1 = risk_from_json(param(s, "h1"));
    int n = optional_int(s, "n", 2001);

    ConcavityOrder order = concavity_order(h0, h1, n);
    DvReport dv = check_dv(h0, h1, n);

    Csv csv(s);
    csv.comment(std::string("concavity_order=") + to_string(order));
    std::string status = dv.holds_strictly ? "holds_strictly"
                         : dv.holds        ? "holds"
                                           : "fails_at=" + fmt(*dv.fails_at);
    csv.comment("dv_increment_convexity=" + status);
    csv.row({"q", "h0", "h1", "increment"});
    for (int i = 0; i < n; ++i) {
        double q = static_cast<double>(i) / (n - 1);
        double a = h0.eval(q), b = h1.eval(q);
        csv.row({fmt(q), fmt(a), fmt(b), fmt(b - a)});
    }
    return csv.str();
}

std::string run_pipeline_compare(const Scenario& s) {
    DecisionProblem dp = decision_problem_from_json(param(s, "dp"));
    PosteriorDist q0 = dist_from_json(param(s, "q0"));
    PosteriorDist q1 = dist_from_json(param(s, "q1"));
    PipelineComparison r = pipeline_compare(dp, q0, q1);

    Csv csv(s);
    csv.row({"w0", "w1", "gap", "cx_relation"});
    csv.row({fmt(r.w0), fmt(r.w1), fmt(r.gap), to_string(r.cx_relation)});
    return csv.str();
}

std::string run_ri_reversal(const Scenario& s) {
    DecisionProblem dp = decision_problem_from_json(param(s, "dp"));
    RiScenario scenario;
    try {
        scenario = make_ri_scenario(std::move(dp), dist_from_json(param(s, "q0")),
                                    dist_from_json(param(s, "q1")));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("field 'params.q0'/'params.q1': ") + e.what());
    }
    std::vector<double> lambdas = param_numbers(s, "lambdas");

    Csv csv(s);
    try {
        csv.comment("lambda_star=" + fmt(reversal_threshold(scenario)));
    } catch (const ZeroAttentionSavings&) {
        csv.comment("lambda_star=undefined (zero attention savings)");
    }
    csv.comment("lambda_bar0=" + fmt(use_threshold(scenario, 0)) +
                " lambda_bar1=" + fmt(use_threshold(scenario, 1)));
    csv.row({"lambda_cog", "W0", "W1", "used0", "used1", "regime"});
    for (const auto& pt : reversal_region(scenario, lambdas))
        csv.row({fmt(pt.lambda_cog), fmt(pt.w0), fmt(pt.w1),
                 pt.used0 ? "true" : "false", pt.used1 ? "true" : "false",
                 to_string(pt.regime)});
    return csv.str();
}

std::string run_rlhf_sweep(const Scenario& s) {
    Generator g = generator_from_json(param(s, "generator"));
    std::vector<double> w_train = param_numbers(s, "w_train");
    std::vector<double> w_eval = param_numbers(s, "w_eval");
    double alpha = s.params.contains("alpha") ? param_number(s, "alpha") : 1.0;
    std::vector<double> lambdas = param_numbers(s, "lambdas");

    RewardSpec reward = make_reward(w_train, alpha);
    PosteriorDist base_eval_law = induced_quality_dist(g, w_eval);
    double best_eval = 0.0;
    for (std::size_t i = 0; i < base_eval_law.size(); ++i)
        best_eval = std::max(best_eval, base_eval_law.support[i]);

    Csv csv(s);
    csv.comment("base_eval_mean=" + fmt(base_eval_law.mean()) +
                " best_eval=" + fmt(best_eval) + " alpha=" + fmt(alpha));
    csv.row({"lambda", "achieved_eval", "tax", "mean_quality", "fosd_vs_base"});
    for (double lambda : lambdas) {
        Generator tilted = tilt(g, reward, lambda);
        PosteriorDist eval_law = induced_quality_dist(tilted, w_eval);
        PosteriorDist train_law = induced_quality_dist(tilted, w_train);
        csv.row({fmt(lambda), fmt(eval_law.mean()), fmt(best_eval - eval_law.mean()),
                 fmt(train_law.mean()),
                 fosd_check(eval_law, base_eval_law) ? "true" : "false"});
    }
    return csv.str();
}

std::string run_goodhart_builtin(const Scenario& s) {
    Generator g = goodhart_example();
    std::vector<double> lambdas =
        s.params.is_object() && s.params.contains("lambdas")
            ? param_numbers(s, "lambdas")
            : std::vector<double>{1.0, 0.5, 0.2, 0.1, 0.05,
                                  0.02, 0.01, 0.005, 0.002, 0.001};
    RewardSpec reward = make_reward({1.0}, kGoodhartAlpha);
    PosteriorDist base = induced_quality_dist(g);

    Csv csv(s);
    csv.comment("base_mean=" + fmt(base.mean()) + " alpha=" + fmt(kGoodhartAlpha));
    csv.row({"lambda", "tilted_mean", "fosd_vs_base"});
    for (double lambda : lambdas) {
        PosteriorDist q = induced_quality_dist(tilt(g, reward, lambda));
        csv.row({fmt(lambda), fmt(q.mean()),
                 fosd_check(q, base) ? "true" : "false"});
    }
    return csv.str();
}

std::string run_diagnostics(const Scenario& s) {
    const json& dists_json = param(s, "dists");
    if (!dists_json.is_array() || dists_json.empty())
        throw ValidationError("field 'params.dists': expected a non-empty array");
    std::vector<PosteriorDist> dists;
    for (const auto& dj : dists_json) dists.push_back(dist_from_json(dj));
    std::vector<double> k_grid = param_numbers(s, "k_grid");
    for (double k : k_grid)
        if (k < 0.0 || k > 1.0)
            throw ValidationError("field 'params.k_grid': entries must lie in [0,1]");

    Csv csv(s);
    return csv.str() + stop_loss_diagnostic_csv(dists, k_grid);
}

std::string run_simplex_check(const Scenario& s) {
    SimplexDist a = simplex_dist_from_json(param(s, "a"));
    SimplexDist b = simplex_dist_from_json(param(s, "b"));
    CxResultK r = cx_compare_k(a, b);

    Csv csv(s);
    auto witness_comment = [&](const char* tag, const std::optional<CxWitness>& w) {
        if (!w) return;
        std::string line = std::string(tag) + " margin=" + fmt(w->margin) + " gradients=";
        json grads = w->gradients;
        line += grads.dump();
        csv.comment(line);
    };
    witness_comment("witness_a", r.witness_a);
    witness_comment("witness_b", r.witness_b);
    csv.row({"order"});
    csv.row({to_string(r.order)});
    return csv.str();
}

}  // namespace

std::string stop_loss_diagnostic_csv(const std::vector<PosteriorDist>& dists,
                                     const std::vector<double>& k_grid) {
    std::ostringstream out;
    out << "k";
    for (std::size_t i = 0; i < dists.size(); ++i) out << ",d" << i;
    out << "\n";
    for (double k : k_grid) {
        out << fmt(k);
        for (const auto& d : dists) out << "," << fmt(stop_loss(d, k));
        out << "\n";
    }

    const double tol = kDefaultTol.prob;
    for (std::size_t i = 0; i + 1 < dists.size(); ++i) {
        bool ge = true, le = true;
        double crossing = -1.0;
        int first_sign = 0;
        for (double k : k_grid) {
            double diff = stop_loss(dists[i], k) - stop_loss(dists[i + 1], k);
            int sign = diff > tol ? 1 : diff < -tol ? -1 : 0;
            if (sign > 0) le = false;
            if (sign < 0) ge = false;
            if (sign != 0 && first_sign == 0) first_sign = sign;
            else if (sign != 0 && sign != first_sign && crossing < 0.0) crossing = k;
        }
        std::string verdict = ge && le ? "equal"
                              : ge     ? "pointwise_ge"
                              : le     ? "pointwise_le"
                                       : "crossing";
        out << "verdict(d" << i << "_vs_d" << i + 1 << ")," << verdict;
        if (verdict == "crossing") out << "," << fmt(crossing);
        out << "\n";
    }
    return out.str();
}

Scenario scenario_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("field '<root>': expected an object");
    Scenario s;
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ValidationError("field 'kind': missing or not a string");
    s.kind = j.at("kind").get<std::string>();
    s.name = j.contains("name") ? j.at("name").get<std::string>() : s.kind;
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            throw ValidationError("field 'seed': expected an integer");
        s.seed = j.at("seed").get<std::uint64_t>();
    }
    s.params = j.contains("params") ? j.at("params") : nlohmann::json::object();
    s.out = j.contains("out") ? j.at("out").get<std::string>() : s.name + ".csv";
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("field '<file>': cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("field '<file>': parse error: ") + e.what());
    }
    return scenario_from_json(j);
}

std::string run_scenario_to_csv(const Scenario& s) {
    if (s.kind == "solve_learning") return run_solve_learning(s);
    if (s.kind == "contraction_sweep") return run_contraction_sweep(s);
    if (s.kind == "compare_losses") return run_compare_losses(s);
    if (s.kind == "pipeline_compare") return run_pipeline_compare(s);
    if (s.kind == "ri_reversal") return run_ri_reversal(s);
    if (s.kind == "rlhf_sweep") return run_rlhf_sweep(s);
    if (s.kind == "goodhart_builtin") return run_goodhart_builtin(s);
    if (s.kind == "diagnostics") return run_diagnostics(s);
    if (s.kind == "simplex_check") return run_simplex_check(s);
    throw ValidationError("field 'kind': unknown scenario kind '" + s.kind + "'");
}

std::string run_scenario(const Scenario& s, const std::string& out_dir) {
    std::string csv = run_scenario_to_csv(s);  // validate before touching disk
    std::filesystem::path path = s.out;
    if (!out_dir.empty()) path = std::filesystem::path(out_dir) / path.filename();
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ValidationError("field 'out': cannot write '" + path.string() + "'");
    out << csv;
    return path.string();
}

std::vector<std::string> builtin_names() {
    return {"goodhart_builtin", "quadratic_solved_model", "log_vs_brier",
            "ri_reversal_demo"};
}

bool is_builtin(const std::string& name) {
    for (const auto& n : builtin_names())
        if (n == name) return true;
    return false;
}

Scenario builtin_scenario(const std::string& name) {
    using nlohmann::json;
    Scenario s;
    s.name = name;
    s.out = name + ".csv";
    if (name == "goodhart_builtin") {
        s.kind = "goodhart_builtin";
        s.params = json::object();
        return s;
    }
    if (name == "quadratic_solved_model") {
        s.kind = "contraction_sweep";
        s.params = json{{"family", {{"kind", "quadratic"}}},
                        {"friction", {{"kind", "dispersion"}, {"lambda", 8.0}}},
                        {"mu", 0.5},
                        {"ts", {0.0, 0.5, 1.0}}};
        return s;
    }
    if (name == "log_vs_brier") {
        s.kind = "compare_losses";
        s.params = json{{"h0", {{"kind", "log"}}}, {"h1", {{"kind", "brier"}}}};
        return s;
    }
    if (name == "ri_reversal_demo") {
        s.kind = "ri_reversal";
        s.params = json{
            {"dp", {{"c_fp", 1.0}, {"c_fn", 1.0}}},
            {"q0", {{"support", {0.0, 1.0}}, {"weights", {0.5, 0.5}}}},
            {"q1", {{"support", {0.25, 0.75}}, {"weights", {0.5, 0.5}}}},
            {"lambdas", {0.1, 0.3, 0.444576, 0.6, 0.8, 1.0, 1.5, 1.9111, 2.2, 3.0}}};
        return s;
    }
    throw ValidationError("field 'name': unknown builtin '" + name + "'");
}

}  // namespace infodesign
