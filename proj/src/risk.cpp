#include "infodesign/risk.hpp"

#include <cmath>
#include <stdexcept>

#include "infodesign/common.hpp"

namespace infodesign {

namespace {

void check_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string("OutOfRange: ") + what +
                                    " must lie in [0,1]");
    }
}

void check_weights(double w0, double w1) {
    if (!(w0 > 0.0) || !(w1 > 0.0))
        throw std::invalid_argument("NonpositiveWeight: w0, w1 must be > 0");
}

}  // namespace

LossFunction log_loss() {
    return {"log", [](double p, int y) {
                double v = (y == 1) ? p : 1.0 - p;
                return v > 0.0 ? -std::log(v) : inf();
            }};
}

LossFunction brier_loss() {
    return {"brier", [](double p, int y) {
                double e = p - (y == 1 ? 1.0 : 0.0);
                return e * e;
            }};
}

LossFunction weighted_ce_loss(double w0, double w1) {
    check_weights(w0, w1);
    return {"weighted_ce", [w0, w1](double p, int y) {
                if (y == 1) return p > 0.0 ? -w1 * std::log(p) : inf();
                return p < 1.0 ? -w0 * std::log(1.0 - p) : inf();
            }};
}

double expected_loss(const LossFunction& L, double p, double q) {
    check_unit(p, "report p");
    check_unit(q, "belief q");
    double s = 0.0;
    if (q > 0.0) s += q * L.eval(p, 1);
    if (q < 1.0) s += (1.0 - q) * L.eval(p, 0);
    return s;
}

double bayes_report(const LossFunction& L, double q, int grid_n) {
    check_unit(q, "belief q");
    if (grid_n < 2) throw std::invalid_argument("OutOfRange: grid_n must be >= 2");

    auto f = [&](double p) { return expected_loss(L, p, q); };

    int best_i = 0;
    double best_v = f(0.0);
    for (int i = 1; i < grid_n; ++i) {
        double p = static_cast<double>(i) / (grid_n - 1);
        double v = f(p);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }

    // Golden-section on the bracketing cell around the grid argmin.
    double lo = static_cast<double>(std::max(0, best_i - 1)) / (grid_n - 1);
    double hi = static_cast<double>(std::min(grid_n - 1, best_i + 1)) / (grid_n - 1);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    double refined = 0.5 * (a + b);
    double gp = static_cast<double>(best_i) / (grid_n - 1);
    return f(refined) <= best_v ? refined : gp;
}

BayesRisk log_risk() {
    return {"H_log", [](double q) { return h_bin(q); },
            [](double q) { return -1.0 / (q * (1.0 - q)); }};
}

BayesRisk brier_risk() {
    return {"H_brier", [](double q) { return q * (1.0 - q); },
            [](double) { return -2.0; }};
}

double weighted_ce_report(double q, double w0, double w1) {
    check_weights(w0, w1);
    check_unit(q, "belief q");
    return w1 * q / (w1 * q + w0 * (1.0 - q));
}

double weighted_ce_bayes_risk(double q, double w0, double w1) {
    check_weights(w0, w1);
    check_unit(q, "belief q");
    auto xlogx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
    double m = w1 * q + w0 * (1.0 - q);
    return -xlogx(w1 * q) - xlogx(w0 * (1.0 - q)) + xlogx(m);
}

double curvature_ratio(double q, double w0, double w1) {
    check_weights(w0, w1);
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("OutOfRange: curvature ratio needs q in (0,1)");
    return w0 * w1 / ((1.0 - q) * w0 + q * w1);
}

BayesRisk weighted_ce_risk(double w0, double w1) {
    check_weights(w0, w1);
    return {"H_weighted_ce",
            [w0, w1](double q) { return weighted_ce_bayes_risk(q, w0, w1); },
            [w0, w1](double q) {
                return -w0 * w1 / (q * (1.0 - q) * (w0 + q * (w1 - w0)));
            }};
}

BayesRisk quadratic_risk(double t) {
    if (t < 0.0 || t > 1.0)
        throw std::invalid_argument("OutOfRange: quadratic family index t in [0,1]");
    return {"H_quadratic", [t](double q) { return q - (1.0 - t) * q * q; },
            [t](double) { return -2.0 * (1.0 - t); }};
}

DvReport check_dv(const BayesRisk& h0, const BayesRisk& h1, int n, double tol) {
    if (n < 3) throw std::invalid_argument("OutOfRange: check_dv needs n >= 3");

    DvReport r;
    r.holds = true;
    r.holds_strictly = true;

    const bool analytic = h0.has_second_derivative() && h1.has_second_derivative();
    const double step = 1.0 / (n - 1);
    for (int i = 1; i + 1 < n; ++i) {
        double q = i * step;
        double dd;
        if (analytic) {
            dd = h1.second_derivative(q) - h0.second_derivative(q);
        } else {
            auto delta = [&](double x) { return h1.eval(x) - h0.eval(x); };
            dd = delta(q - step) - 2.0 * delta(q) + delta(q + step);
        }
        if (dd < tol) r.holds_strictly = false;
        if (dd < -tol) {
            r.holds = false;
            r.fails_at = q;
            break;
        }
    }
    if (!r.holds) r.holds_strictly = false;
    return r;
}

const char* to_string(ConcavityOrder o) {
    switch (o) {
        case ConcavityOrder::HBelow: return "h_below";
        case ConcavityOrder::HAbove: return "h_above";
        case ConcavityOrder::Equal: return "equal";
        case ConcavityOrder::Incomparable: return "incomparable";
    }
    return "?";
}

ConcavityOrder concavity_order(const BayesRisk& h, const BayesRisk& h_tilde,
                               int n) {
    bool below = check_dv(h, h_tilde, n).holds;   // h_tilde - h convex
    bool above = check_dv(h_tilde, h, n).holds;   // h - h_tilde convex
    if (below && above) return ConcavityOrder::Equal;
    if (below) return ConcavityOrder::HBelow;
    if (above) return ConcavityOrder::HAbove;
    return ConcavityOrder::Incomparable;
}

double value_of_information(const BayesRisk& h, const PosteriorDist& d) {
    return h.eval(d.mean()) - d.expectation(h.eval);
}

BayesRisk normalize_scale(const BayesRisk& h, double reference_at_half) {
    double at_half = h.eval(0.5);
    if (at_half == 0.0)
        throw std::invalid_argument("OutOfRange: cannot normalise a curve with H(1/2) = 0");
    double s = reference_at_half / at_half;
    BayesRisk out;
    out.name = h.name + "_scaled";
    out.eval = [s, e = h.eval](double q) { return s * e(q); };
    if (h.has_second_derivative())
        out.second_derivative = [s, d = h.second_derivative](double q) { return s * d(q); };
    return out;
}

RiskFamily quadratic_family() {
    return {"quadratic", [](double t) { return quadratic_risk(t); }};
}

RiskFamily interpolated_family(BayesRisk h0, BayesRisk h1) {
    std::string name = h0.name + "_to_" + h1.name;
    auto at = [h0, h1](double t) {
        BayesRisk r;
        r.name = h0.name + "+" + std::to_string(t) + "*(" + h1.name + "-" + h0.name + ")";
        r.eval = [t, e0 = h0.eval, e1 = h1.eval](double q) {
            return (1.0 - t) * e0(q) + t * e1(q);
        };
        if (h0.has_second_derivative() && h1.has_second_derivative()) {
            r.second_derivative = [t, d0 = h0.second_derivative,
                                   d1 = h1.second_derivative](double q) {
                return (1.0 - t) * d0(q) + t * d1(q);
            };
        }
        return r;
    };
    return {name, at};
}

}  // namespace infodesign
