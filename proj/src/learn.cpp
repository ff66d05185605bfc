#include "infodesign/learn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "infodesign/common.hpp"
#include "infodesign/errors.hpp"

namespace infodesign {

Friction zero_friction() {
    return {"zero", [](const PosteriorDist&) { return 0.0; }, true};
}

double friction_mutual_info(const PosteriorDist& d, double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("OutOfRange: kappa must be >= 0");
    return kappa * (h_bin(d.mean()) - d.expectation(h_bin));
}

double friction_mutual_info_kl(const PosteriorDist& d, double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("OutOfRange: kappa must be >= 0");
    double mu = d.mean();
    return kappa * d.expectation([mu](double q) { return kl_bern(q, mu); });
}

double friction_dispersion(const PosteriorDist& d, double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("NonpositiveLambda: dispersion needs lambda > 0");
    double mu = d.mean();
    double gap = d.second_moment() - mu * mu;
    return 0.5 * lambda * gap * gap;
}

Friction mutual_info_friction(double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("OutOfRange: kappa must be >= 0");
    return {"mutual_info",
            [kappa](const PosteriorDist& d) { return friction_mutual_info(d, kappa); },
            true};
}

Friction dispersion_friction(double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("NonpositiveLambda: dispersion needs lambda > 0");
    return {"dispersion",
            [lambda](const PosteriorDist& d) { return friction_dispersion(d, lambda); },
            true};
}

Solution solve_quadratic_closed_form(double mu, double lambda, double t) {
    if (!(mu > 0.0 && mu < 1.0) || !(lambda > 0.0) || t < 0.0 || t > 1.0)
        throw std::invalid_argument(
            "InvalidParams: need mu in (0,1), lambda > 0, t in [0,1]");

    double x = std::min(mu * mu + (1.0 - t) / lambda, mu);
    double q_high = x / mu;
    Solution s;
    s.dist = two_point(mu, q_high);
    s.objective_value = mu - (1.0 - t) * x + 0.5 * lambda * (x - mu * mu) * (x - mu * mu);
    s.method = "closed_form";
    return s;
}

namespace {

PosteriorDist build_pair(double a, double b, double mu) {
    double w_b = (mu - a) / (b - a);
    if (w_b <= 0.0) return point_mass(a);
    if (w_b >= 1.0) return point_mass(b);
    return make_dist({a, b}, {1.0 - w_b, w_b});
}

}  // namespace

Solution solve_two_point(const LearningProblem& p) {
    const double mu = p.prior_mean;
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("InvalidParams: prior mean must lie in (0,1)");
    if (p.grid_n < 3)
        throw std::invalid_argument("InvalidParams: grid_n must be >= 3");
    if (!p.friction.moment_based)
        throw UnsupportedObjective(
            "UnsupportedObjective: friction '" + p.friction.name +
            "' declares itself non-moment-based");

    const int n = p.grid_n;
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / (n - 1);

    auto objective = [&](const PosteriorDist& d) {
        return d.expectation(p.risk.eval) + p.friction.eval(d);
    };

    PosteriorDist pm = point_mass(mu);
    const double pm_obj = objective(pm);

    struct Cell {
        double a, b, obj;
    };
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(n) * n / 4);

    double f_min = pm_obj;
    for (int ia = 0; ia < n && grid[ia] <= mu; ++ia) {
        for (int ib = n - 1; ib >= 0 && grid[ib] > grid[ia]; --ib) {
            if (grid[ib] < mu) break;
            double obj = objective(build_pair(grid[ia], grid[ib], mu));
            cells.push_back({grid[ia], grid[ib], obj});
            f_min = std::min(f_min, obj);
        }
    }

    // Candidates within kWindow of the minimum are indistinguishable at the
    // reporting tolerance. Among them the representative is canonical:
    // the point mass if admissible (least dispersed), else the smallest
    // lower support point (the {0, q_high} family of the solved model),
    // then objective, then second moment. This keeps the reported optimum
    // on the canonical one-parameter frontier when the minimiser set is
    // flat in the law.
    constexpr double kWindow = 5e-7;
    constexpr double kTieTol = 1e-12;

    Solution s;
    s.method = "two_point_enumeration";

    if (pm_obj <= f_min + kWindow) {
        s.dist = std::move(pm);
        s.objective_value = pm_obj;
        return s;
    }

    const Cell* best = nullptr;
    double best_low = 0.0, best_x = 0.0;
    for (const Cell& c : cells) {
        if (c.obj > f_min + kWindow) continue;
        double w_b = (mu - c.a) / (c.b - c.a);
        double low = w_b >= 1.0 ? c.b : c.a;
        double x = mu * (c.a + c.b) - c.a * c.b;
        bool take = false;
        if (!best) {
            take = true;
        } else if (low < best_low - kTieTol) {
            take = true;
        } else if (low <= best_low + kTieTol) {
            if (c.obj < best->obj - kTieTol) take = true;
            else if (c.obj <= best->obj + kTieTol && x < best_x - kTieTol) take = true;
        }
        if (take) {
            best = &c;
            best_low = low;
            best_x = x;
        }
    }

    s.dist = build_pair(best->a, best->b, mu);
    s.objective_value = best->obj;
    return s;
}

SweepReport contraction_sweep(const RiskFamily& family, const Friction& friction,
                              double mu, const std::vector<double>& ts, int grid_n) {
    if (!std::is_sorted(ts.begin(), ts.end()))
        throw std::invalid_argument("InvalidParams: ts must be sorted ascending");

    SweepReport report;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        LearningProblem p{family.at(ts[i]), friction, mu, grid_n};
        SweepEntry e;
        e.t = ts[i];
        e.solution = solve_two_point(p);
        e.friction_cost = friction.eval(e.solution.dist);
        if (i > 0) {
            e.vs_prev = convex_order_compare(report.entries.back().solution.dist,
                                             e.solution.dist);
            if (e.vs_prev != CxOrder::ADominates && e.vs_prev != CxOrder::Equal) {
                report.chain_ok = false;
                report.violations.push_back(i);
            }
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

MonotoneReport check_cost_monotone(
    const Friction& f,
    const std::vector<std::pair<PosteriorDist, PosteriorDist>>& pairs) {
    MonotoneReport report;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CxOrder rel = convex_order_compare(pairs[i].first, pairs[i].second);
        if (rel != CxOrder::ADominates && rel != CxOrder::Equal)
            throw IncomparablePair("IncomparablePair: pair " + std::to_string(i) +
                                   " is not ordered first >=cx second (" +
                                   to_string(rel) + ")");
        if (f.eval(pairs[i].first) < f.eval(pairs[i].second) - 1e-12) {
            report.ok = false;
            report.violations.push_back(i);
        }
    }
    return report;
}

}  // namespace infodesign
