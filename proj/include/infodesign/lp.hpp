#pragma once

#include <vector>

namespace infodesign::lp {

// Phase-1 feasibility for {A x = b, x >= 0} on small dense systems.
// On infeasibility, farkas holds a certificate y with yᵀA <= 0
// (componentwise over columns, up to tol) and yᵀb > 0.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<double> x;
    std::vector<double> farkas;
};

FeasibilityResult solve_equality_feasibility(
    const std::vector<std::vector<double>>& a, const std::vector<double>& b,
    double tol = 1e-9);

}  // namespace infodesign::lp
