#pragma once

#include <array>
#include <string>
#include <vector>

#include "infodesign/beliefs.hpp"
#include "infodesign/common.hpp"

namespace infodesign {

// Finite decision problem over the binary state: payoff[i][y] = u(a_i, y).
struct DecisionProblem {
    std::vector<std::string> actions;
    std::vector<std::array<double, 2>> payoff;
};

struct CostPair {
    double c_fp = 1.0;
    double c_fn = 1.0;
};

// Misclassification costs as negative payoffs; "act" listed first so the
// tie at q = tau goes to acting (the >= convention).
DecisionProblem cost_pair_problem(const CostPair& c);

DecisionProblem make_decision_problem(std::vector<std::string> actions,
                                      std::vector<std::array<double, 2>> payoff);

// V(q) = max_a q u(a,1) + (1-q) u(a,0); convex in q.
double indirect_value(const DecisionProblem& dp, double q);

// Argmax action label; ties break toward the first-listed action.
const std::string& optimal_action(const DecisionProblem& dp, double q);

// tau = c_fp / (c_fp + c_fn).
double threshold(const CostPair& c);

// E[V(Q)] under d.
double welfare(const DecisionProblem& dp, const PosteriorDist& d);

struct PipelineComparison {
    double w0 = 0.0;
    double w1 = 0.0;
    double gap = 0.0;            // w0 - w1
    CxOrder cx_relation = CxOrder::Incomparable;
};

PipelineComparison pipeline_compare(const DecisionProblem& dp,
                                    const PosteriorDist& q0,
                                    const PosteriorDist& q1);

struct TwoPointGap {
    double loss_sep = 0.0;
    double loss_emb = 0.0;
    double gap = 0.0;            // loss_emb - loss_sep, > 0 in the regime
};

// Expected losses of the separated and embedded pipelines in the worked
// two-point regime: posteriors {mu - delta, mu + delta}, embedded spread
// delta_w with mu + delta_w below the threshold. RegimeViolation names the
// violated inequality otherwise.
TwoPointGap two_point_gap(double mu, double delta, double delta_w,
                          const CostPair& c);

struct CutoffEquivalence {
    double u_post = 0.0;
    double u_emb = 0.0;
    bool equal = false;
};

// Expected payoff on d of the post-processing rule (act iff q >= tau) vs.
// the embedded rule (act iff the cross-weighted report s(q) >= 1/2, i.e.
// q >= w0/(w0+w1)). The two agree whenever w0:w1 = c_fp:c_fn, and more
// generally whenever d puts no mass between the two cutoffs.
CutoffEquivalence embedded_cutoff_equivalence(const CostPair& c, double w0,
                                              double w1, const PosteriorDist& d);

// Random problem generator for property suites: 1..5 actions, payoffs
// uniform in [-1, 1].
DecisionProblem random_decision_problem(SplitMix64& rng, int max_actions = 5);

}  // namespace infodesign
