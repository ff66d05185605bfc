#include "infodesign/attention.hpp"

#include <cmath>
#include <stdexcept>

#include "infodesign/common.hpp"
#include "infodesign/errors.hpp"

namespace infodesign {

RiScenario make_ri_scenario(DecisionProblem dp, PosteriorDist q0,
                            PosteriorDist q1) {
    if (std::fabs(q0.mean() - q1.mean()) > kDefaultTol.mean)
        throw std::invalid_argument(
            "OutOfRange: q0 and q1 must share the prior mean");
    RiScenario s{std::move(dp), std::move(q0), std::move(q1), 0.0};
    s.prior_mean = s.q0.mean();
    return s;
}

double mutual_info(const PosteriorDist& d) {
    return h_bin(d.mean()) - d.expectation(h_bin);
}

namespace {

const PosteriorDist& pick(const RiScenario& s, int which) {
    if (which != 0 && which != 1)
        throw std::invalid_argument("OutOfRange: pipeline index must be 0 or 1");
    return which == 0 ? s.q0 : s.q1;
}

}  // namespace

PipelineWelfare pipeline_welfare(const RiScenario& s, int which,
                                 double lambda_cog) {
    if (lambda_cog < 0.0)
        throw std::invalid_argument("OutOfRange: lambda_cog must be >= 0");
    const PosteriorDist& q = pick(s, which);
    double outside = indirect_value(s.dp, s.prior_mean);
    double net = welfare(s.dp, q) - lambda_cog * mutual_info(q);
    PipelineWelfare w;
    w.used = net > outside;
    w.value = w.used ? net : outside;
    return w;
}

double use_threshold(const RiScenario& s, int which) {
    const PosteriorDist& q = pick(s, which);
    double info = mutual_info(q);
    if (info <= 0.0) return 0.0;
    return (welfare(s.dp, q) - indirect_value(s.dp, s.prior_mean)) / info;
}

double reversal_threshold(const RiScenario& s) {
    double delta_mi = mutual_info(s.q0) - mutual_info(s.q1);
    if (delta_mi <= kDefaultTol.prob)
        throw ZeroAttentionSavings(
            "ZeroAttentionSavings: the two pipelines process the same information");
    double delta_i = welfare(s.dp, s.q0) - welfare(s.dp, s.q1);
    return delta_i / delta_mi;
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::SeparationDominates: return "separation_dominates";
        case Regime::EmbeddingDominatesBothUsed: return "embedding_dominates_both_used";
        case Regime::EmbeddingDominatesUptake: return "embedding_dominates_uptake";
        case Regime::Tie: return "tie";
        case Regime::BothIgnored: return "both_ignored";
    }
    return "?";
}

std::vector<RegimePoint> reversal_region(const RiScenario& s,
                                         const std::vector<double>& lambdas) {
    // Lemma check: a convex-order dominant pipeline carries at least as much
    // mutual information.
    CxOrder rel = convex_order_compare(s.q0, s.q1);
    if ((rel == CxOrder::ADominates || rel == CxOrder::Equal) &&
        mutual_info(s.q0) < mutual_info(s.q1) - kDefaultTol.prob)
        throw std::logic_error(
            "internal invariant: dominant pipeline has lower mutual information");

    double bar0 = use_threshold(s, 0);
    double bar1 = use_threshold(s, 1);

    std::vector<RegimePoint> out;
    out.reserve(lambdas.size());
    for (double lc : lambdas) {
        PipelineWelfare w0 = pipeline_welfare(s, 0, lc);
        PipelineWelfare w1 = pipeline_welfare(s, 1, lc);
        RegimePoint pt;
        pt.lambda_cog = lc;
        pt.w0 = w0.value;
        pt.w1 = w1.value;
        pt.used0 = w0.used;
        pt.used1 = w1.used;
        pt.at_use_boundary =
            std::fabs(lc - bar0) <= 1e-12 || std::fabs(lc - bar1) <= 1e-12;
        if (!w0.used && !w1.used) {
            pt.regime = Regime::BothIgnored;
        } else if (std::fabs(w1.value - w0.value) <= 1e-12) {
            pt.regime = Regime::Tie;
        } else if (w0.value > w1.value) {
            pt.regime = Regime::SeparationDominates;
        } else if (w0.used) {
            pt.regime = Regime::EmbeddingDominatesBothUsed;
        } else {
            pt.regime = Regime::EmbeddingDominatesUptake;
        }
        out.push_back(pt);
    }
    return out;
}

}  // namespace infodesign
