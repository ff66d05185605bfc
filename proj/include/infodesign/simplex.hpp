#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infodesign/beliefs.hpp"

namespace infodesign {

// Discrete distribution over belief vectors on the K-simplex, canonical
// form (zero-weight atoms dropped, duplicate vectors merged, support sorted
// lexicographically, weights normalised).
struct SimplexDist {
    std::vector<std::vector<double>> support;
    std::vector<double> weights;
    std::vector<double> mean;

    std::size_t size() const { return support.size(); }
    std::size_t dim() const { return mean.size(); }
};

SimplexDist make_simplex_dist(std::vector<std::vector<double>> support,
                              std::vector<double> weights);

SimplexDist simplex_point_mass(std::vector<double> q);

// Embeds a scalar belief law as vectors (1-q, q) on the 2-simplex.
SimplexDist embed_scalar(const PosteriorDist& d);

struct DecisionProblemK {
    std::vector<std::string> actions;
    std::vector<std::vector<double>> payoff;  // payoff[a][y], y in 0..K-1
};

DecisionProblemK make_decision_problem_k(std::vector<std::string> actions,
                                         std::vector<std::vector<double>> payoff);

// V(q) = max_a sum_y q_y u(a,y). Throws NotOnSimplex for invalid q.
double indirect_value_k(const DecisionProblemK& dp, const std::vector<double>& q);

double welfare_k(const DecisionProblemK& dp, const SimplexDist& d);

// Convex witness for a failed dominance direction: phi(x) = max_j g_j . x,
// a max of linear functions with E_contraction[phi] > E_spread[phi].
struct CxWitness {
    std::vector<std::vector<double>> gradients;
    double margin = 0.0;

    double eval(const std::vector<double>& x) const;
};

struct CxResultK {
    CxOrder order = CxOrder::Incomparable;
    // Present when the corresponding direction is infeasible and a verified
    // certificate was extracted: witness_a disproves "A dominates B",
    // witness_b disproves "B dominates A".
    std::optional<CxWitness> witness_a;
    std::optional<CxWitness> witness_b;
};

// Convex order on the simplex via martingale-coupling feasibility: B is a
// mean-preserving contraction of A iff there are joint weights pi(i,j) >= 0
// with row marginals A, column marginals B, and E[A | B = b_j] = b_j.
CxResultK cx_compare_k(const SimplexDist& a, const SimplexDist& b,
                       double mean_tol = kDefaultTol.mean,
                       double feas_tol = 1e-9);

// Midpoint-convexity check of h1 - h0 along random chords inside the convex
// hull of the given points; the desk-scale surrogate for a tangent-space
// Hessian condition.
bool dv_check_k(const std::function<double(const std::vector<double>&)>& h0,
                const std::function<double(const std::vector<double>&)>& h1,
                const std::vector<std::vector<double>>& supports, double tol,
                int n_chords = 1000, std::uint64_t seed = 20240901ULL);

}  // namespace infodesign
