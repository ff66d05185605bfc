#include "infodesign/lp.hpp"

#include <cmath>
#include <stdexcept>

namespace infodesign::lp {

// Dense tableau phase-1 with Bland's rule. The basis starts as the
// artificial identity block; minimising the artificial mass either drives
// it to ~0 (feasible) or ends positive, in which case the phase-1 duals
// form a Farkas certificate.
FeasibilityResult solve_equality_feasibility(
    const std::vector<std::vector<double>>& a, const std::vector<double>& b,
    double tol) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");

    const double pivot_tol = 1e-11;

    // Flip rows so the rhs is nonnegative; remember the signs for the
    // certificate.
    std::vector<double> sign(m, 1.0);
    // Tableau: columns [x (n) | artificials (m) | rhs].
    std::vector<std::vector<double>> t(m, std::vector<double>(n + m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("lp: ragged matrix");
        sign[i] = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = sign[i] * a[i][j];
        t[i][n + i] = 1.0;
        t[i][n + m] = sign[i] * b[i];
    }

    // Reduced-cost row for min sum(artificials): obj[j] = c_j - y'A_j with
    // initial y = 1. obj[last] = -(current objective).
    std::vector<double> obj(n + m + 1, 0.0);
    for (std::size_t j = 0; j <= n + m; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        obj[j] = (j >= n && j < n + m ? 1.0 : 0.0) - s;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    const std::size_t max_iter = 200 * (n + m + 1);
    for (std::size_t iter = 0;; ++iter) {
        if (iter > max_iter) throw std::runtime_error("lp: iteration limit exceeded");

        // Bland: smallest-index column with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (obj[j] < -pivot_tol) {
                enter = j;
                break;
            }
        }
        if (enter == n + m) break;  // optimal

        std::size_t leave = m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > pivot_tol) {
                double ratio = t[i][n + m] / t[i][enter];
                if (leave == m || ratio < best_ratio - 1e-15 ||
                    (std::fabs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m)
            throw std::runtime_error("lp: unbounded phase-1 (should not happen)");

        // Pivot on (leave, enter).
        double pv = t[leave][enter];
        for (double& v : t[leave]) v /= pv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            double f = t[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        double f = obj[enter];
        for (std::size_t j = 0; j <= n + m; ++j) obj[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    FeasibilityResult r;
    double residual = -obj[n + m];  // remaining artificial mass
    if (residual <= tol) {
        r.feasible = true;
        r.x.assign(n, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) r.x[basis[i]] = t[i][n + m];
        return r;
    }

    // Farkas certificate from the phase-1 duals: y_i = 1 - obj[artificial_i],
    // mapped back through the row sign flips.
    r.feasible = false;
    r.farkas.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        r.farkas[i] = sign[i] * (1.0 - obj[n + i]);
    return r;
}

}  // namespace infodesign::lp
