#pragma once

#include <functional>
#include <optional>
#include <string>

#include "infodesign/beliefs.hpp"

namespace infodesign {

// Training loss L(p, y). eval may return +inf at the boundary (log loss).
struct LossFunction {
    std::string name;
    std::function<double(double p, int y)> eval;
};

LossFunction log_loss();
LossFunction brier_loss();
// Class-weighted cross-entropy: L(p,1) = -w1 log p, L(p,0) = -w0 log(1-p).
LossFunction weighted_ce_loss(double w0, double w1);

// Expected loss q*L(p,1) + (1-q)*L(p,0), with the 0 * inf = 0 convention
// on vanishing outcome weights; +inf propagates otherwise.
double expected_loss(const LossFunction& L, double p, double q);

// Grid argmin of expected loss over reports p, refined by golden-section on
// the bracketing cell. Ties on the grid break toward the smaller report.
double bayes_report(const LossFunction& L, double q, int grid_n = 2001);

// Bayes risk curve H(q) on [0,1], finite at the boundary by the usual limit
// conventions. second_derivative is optional and, when present on both
// curves of a comparison, replaces finite differences.
struct BayesRisk {
    std::string name;
    std::function<double(double)> eval;
    std::function<double(double)> second_derivative;  // may be empty

    bool has_second_derivative() const { return static_cast<bool>(second_derivative); }
};

BayesRisk log_risk();     // binary entropy (nats)
BayesRisk brier_risk();   // q(1-q)
BayesRisk weighted_ce_risk(double w0, double w1);
BayesRisk quadratic_risk(double t);  // H_t(q) = q - (1-t) q^2

// Closed form of the weighted-CE Bayes act: w1 q / (w1 q + w0 (1-q)).
double weighted_ce_report(double q, double w0, double w1);
double weighted_ce_bayes_risk(double q, double w0, double w1);
// rho(q) = w0 w1 / ((1-q) w0 + q w1) = H_w''(q) / H_log''(q), q in (0,1).
double curvature_ratio(double q, double w0, double w1);

// Convexity check of the increment h1 - h0 on an n-point grid: centered
// second differences, or the analytic second derivatives when both curves
// carry one.
struct DvReport {
    bool holds = false;
    bool holds_strictly = false;
    std::optional<double> fails_at;
};

DvReport check_dv(const BayesRisk& h0, const BayesRisk& h1, int n = 2001,
                  double tol = 1e-9);

enum class ConcavityOrder { HBelow, HAbove, Equal, Incomparable };

const char* to_string(ConcavityOrder o);

ConcavityOrder concavity_order(const BayesRisk& h, const BayesRisk& h_tilde,
                               int n = 2001);

// H(mean(d)) - E[H(Q)] under d; nonnegative for concave H.
double value_of_information(const BayesRisk& h, const PosteriorDist& d);

// Rescales so that H(1/2) equals the reference value. Scale is part of the
// design choice and is never applied implicitly.
BayesRisk normalize_scale(const BayesRisk& h, double reference_at_half);

// One-parameter family of Bayes risks, t in [0,1].
struct RiskFamily {
    std::string name;
    std::function<BayesRisk(double)> at;
};

RiskFamily quadratic_family();
// H_t = (1-t) h0 + t h1.
RiskFamily interpolated_family(BayesRisk h0, BayesRisk h1);

}  // namespace infodesign
