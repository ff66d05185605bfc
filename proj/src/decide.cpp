#include "infodesign/decide.hpp"

#include <cmath>
#include <stdexcept>

#include "infodesign/errors.hpp"

namespace infodesign {

namespace {

void check_q(double q) {
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("OutOfRange: belief q must lie in [0,1]");
}

void check_costs(const CostPair& c) {
    if (!(c.c_fp > 0.0) || !(c.c_fn > 0.0))
        throw std::invalid_argument("OutOfRange: costs must be strictly positive");
}

}  // namespace

DecisionProblem make_decision_problem(std::vector<std::string> actions,
                                      std::vector<std::array<double, 2>> payoff) {
    if (actions.empty() || actions.size() != payoff.size())
        throw std::invalid_argument("OutOfRange: need >= 1 action with matching payoff rows");
    for (const auto& row : payoff)
        if (!std::isfinite(row[0]) || !std::isfinite(row[1]))
            throw std::invalid_argument("OutOfRange: payoff entries must be finite");
    return {std::move(actions), std::move(payoff)};
}

DecisionProblem cost_pair_problem(const CostPair& c) {
    check_costs(c);
    return make_decision_problem({"act", "pass"},
                                 {{{-c.c_fp, 0.0}}, {{0.0, -c.c_fn}}});
}

double indirect_value(const DecisionProblem& dp, double q) {
    check_q(q);
    double best = -inf();
    for (const auto& row : dp.payoff)
        best = std::max(best, q * row[1] + (1.0 - q) * row[0]);
    return best;
}

const std::string& optimal_action(const DecisionProblem& dp, double q) {
    check_q(q);
    std::size_t best = 0;
    double best_v = q * dp.payoff[0][1] + (1.0 - q) * dp.payoff[0][0];
    for (std::size_t i = 1; i < dp.payoff.size(); ++i) {
        double v = q * dp.payoff[i][1] + (1.0 - q) * dp.payoff[i][0];
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    return dp.actions[best];
}

double threshold(const CostPair& c) {
    check_costs(c);
    return c.c_fp / (c.c_fp + c.c_fn);
}

double welfare(const DecisionProblem& dp, const PosteriorDist& d) {
    return d.expectation([&](double q) { return indirect_value(dp, q); });
}

PipelineComparison pipeline_compare(const DecisionProblem& dp,
                                    const PosteriorDist& q0,
                                    const PosteriorDist& q1) {
    PipelineComparison r;
    r.w0 = welfare(dp, q0);
    r.w1 = welfare(dp, q1);
    r.gap = r.w0 - r.w1;
    r.cx_relation = convex_order_compare(q0, q1);
    return r;
}

TwoPointGap two_point_gap(double mu, double delta, double delta_w,
                          const CostPair& c) {
    check_costs(c);
    double tau = threshold(c);
    if (!(delta_w > 0.0) || !(delta_w < delta))
        throw RegimeViolation("RegimeViolation: need 0 < delta_w < delta");
    if (mu - delta < 0.0 || mu + delta > 1.0)
        throw RegimeViolation("RegimeViolation: need mu +- delta inside [0,1]");
    if (!(mu - delta < tau))
        throw RegimeViolation("RegimeViolation: need mu - delta < tau");
    if (!(tau < mu + delta))
        throw RegimeViolation("RegimeViolation: need tau < mu + delta");
    if (!(mu + delta_w < tau))
        throw RegimeViolation("RegimeViolation: need mu + delta_w < tau");

    TwoPointGap g;
    g.loss_sep = 0.5 * ((mu - delta) * c.c_fn + (1.0 - (mu + delta)) * c.c_fp);
    g.loss_emb = mu * c.c_fn;
    g.gap = 0.5 * ((mu + delta) * c.c_fn - (1.0 - (mu + delta)) * c.c_fp);
    return g;
}

CutoffEquivalence embedded_cutoff_equivalence(const CostPair& c, double w0,
                                              double w1, const PosteriorDist& d) {
    check_costs(c);
    if (!(w0 > 0.0) || !(w1 > 0.0))
        throw std::invalid_argument("NonpositiveWeight: w0, w1 must be > 0");

    double tau_post = threshold(c);
    double tau_emb = w0 / (w0 + w1);  // s(q) >= 1/2  <=>  q >= w0/(w0+w1)

    auto payoff_with_cutoff = [&](double cutoff) {
        return d.expectation([&](double q) {
            bool act = q >= cutoff;  // tie goes to acting
            return act ? -(1.0 - q) * c.c_fp : -q * c.c_fn;
        });
    };

    CutoffEquivalence r;
    r.u_post = payoff_with_cutoff(tau_post);
    r.u_emb = payoff_with_cutoff(tau_emb);
    r.equal = std::fabs(r.u_post - r.u_emb) <= 1e-12;
    return r;
}

DecisionProblem random_decision_problem(SplitMix64& rng, int max_actions) {
    int n = rng.uniform_int(1, max_actions);
    std::vector<std::string> actions;
    std::vector<std::array<double, 2>> payoff;
    for (int i = 0; i < n; ++i) {
        actions.push_back("a" + std::to_string(i));
        payoff.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    }
    return {std::move(actions), std::move(payoff)};
}

}  // namespace infodesign
