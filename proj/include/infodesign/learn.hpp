#pragma once

#include <functional>
#include <string>
#include <vector>

#include "infodesign/beliefs.hpp"
#include "infodesign/risk.hpp"

namespace infodesign {

// Law-invariant learning friction C(Q) >= 0. moment_based marks frictions
// whose value depends on the law only through expectations of fixed
// functions, which is what the two-point solver requires.
struct Friction {
    std::string name;
    std::function<double(const PosteriorDist&)> eval;
    bool moment_based = true;
};

Friction zero_friction();
Friction mutual_info_friction(double kappa);
Friction dispersion_friction(double lambda);

// kappa * (h_bin(mu) - E[h_bin(Q)]), natural log.
double friction_mutual_info(const PosteriorDist& d, double kappa);
// Same value through the KL route, kappa * E[KL(Bern(Q) || Bern(mu))];
// kept as an independent path for cross-checking.
double friction_mutual_info_kl(const PosteriorDist& d, double kappa);
// (lambda/2) * (E[Q^2] - mu^2)^2.
double friction_dispersion(const PosteriorDist& d, double lambda);

struct LearningProblem {
    BayesRisk risk;
    Friction friction;
    double prior_mean = 0.5;
    int grid_n = 401;
};

struct Solution {
    PosteriorDist dist;
    double objective_value = 0.0;
    std::string method;

    double q_high() const { return dist.support.back(); }
};

// Closed form for the quadratic family H_t with the dispersion friction:
// x* = min(mu^2 + (1-t)/lambda, mu), q_high = x*/mu.
Solution solve_quadratic_closed_form(double mu, double lambda, double t);

// Exhaustive enumeration of two-point supports {a, b}, a <= mu <= b, on the
// n-point grid (weight on b fixed by the mean constraint) plus the point
// mass at mu. Exact for objectives linear in the law; for moment-convex
// frictions it is exact among two-point laws and an upper bound otherwise.
// Near-ties are reported canonically; see the selection rule in learn.cpp.
Solution solve_two_point(const LearningProblem& p);

struct SweepEntry {
    double t = 0.0;
    Solution solution;
    double friction_cost = 0.0;
    // Convex-order relation of the previous (smaller-t) solution vs. this
    // one; Equal for the first entry.
    CxOrder vs_prev = CxOrder::Equal;
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    bool chain_ok = true;
    // Indices (into entries) where the adjacent relation was neither
    // ADominates nor Equal. A violation falsifies comparability for the
    // instance, not the contraction theorem.
    std::vector<std::size_t> violations;
};

SweepReport contraction_sweep(const RiskFamily& family, const Friction& friction,
                              double mu, const std::vector<double>& ts,
                              int grid_n = 401);

struct MonotoneReport {
    bool ok = true;
    std::vector<std::size_t> violations;
};

// For each pair (first >=cx second), checks C(first) >= C(second) - 1e-12.
// Throws IncomparablePair if a pair is not ordered.
MonotoneReport check_cost_monotone(
    const Friction& f,
    const std::vector<std::pair<PosteriorDist, PosteriorDist>>& pairs);

}  // namespace infodesign
