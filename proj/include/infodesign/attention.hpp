#pragma once

#include <string>
#include <vector>

#include "infodesign/beliefs.hpp"
#include "infodesign/decide.hpp"

namespace infodesign {

// Rational-inattention comparison of a preference-free pipeline (q0) and a
// preference-embedded one (q1) for a common decision problem and prior.
struct RiScenario {
    DecisionProblem dp;
    PosteriorDist q0;
    PosteriorDist q1;
    double prior_mean = 0.5;
};

RiScenario make_ri_scenario(DecisionProblem dp, PosteriorDist q0,
                            PosteriorDist q1);

// I(Y;Q) = h_bin(mu) - E[h_bin(Q)], nats; >= 0.
double mutual_info(const PosteriorDist& d);

struct PipelineWelfare {
    double value = 0.0;
    bool used = false;  // strict improvement over acting on the prior
};

// W_i = max(V(mu), E[V(Q_i)] - lambda_cog * I(Y;Q_i)).
PipelineWelfare pipeline_welfare(const RiScenario& s, int which,
                                 double lambda_cog);

// Largest attention price at which pipeline i is used rather than ignored;
// 0 for an uninformative pipeline.
double use_threshold(const RiScenario& s, int which);

// lambda* = Delta_I / Delta_MI. Throws ZeroAttentionSavings when the
// mutual-information gap is not positive.
double reversal_threshold(const RiScenario& s);

enum class Regime {
    SeparationDominates,
    EmbeddingDominatesBothUsed,
    EmbeddingDominatesUptake,
    Tie,
    BothIgnored,
};

const char* to_string(Regime r);

struct RegimePoint {
    double lambda_cog = 0.0;
    double w0 = 0.0;
    double w1 = 0.0;
    bool used0 = false;
    bool used1 = false;
    Regime regime = Regime::Tie;
    // lambda_cog sits (numerically) on a use threshold; the strict "used"
    // convention leaves the boundary point unused.
    bool at_use_boundary = false;
};

std::vector<RegimePoint> reversal_region(const RiScenario& s,
                                         const std::vector<double>& lambdas);

}  // namespace infodesign
