#include "infodesign/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "infodesign/lp.hpp"

namespace infodesign {

namespace {

constexpr double kMergeTol = 1e-12;

bool vec_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool vec_close(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > kMergeTol) return false;
    return true;
}

}  // namespace

SimplexDist make_simplex_dist(std::vector<std::vector<double>> support,
                              std::vector<double> weights) {
    if (support.empty() || support.size() != weights.size())
        throw std::invalid_argument("EmptySupport: support/weights mismatch");
    const std::size_t k = support[0].size();
    if (k < 1) throw std::invalid_argument("NotOnSimplex: need K >= 1 coordinates");

    std::vector<std::size_t> idx(support.size());
    std::iota(idx.begin(), idx.end(), 0);

    for (std::size_t i = 0; i < support.size(); ++i) {
        auto& v = support[i];
        if (v.size() != k)
            throw std::invalid_argument("NotOnSimplex: ragged support vectors");
        double total = 0.0;
        for (double& c : v) {
            if (c < -kMergeTol)
                throw std::invalid_argument("NotOnSimplex: negative coordinate");
            c = std::max(c, 0.0);
            total += c;
        }
        if (std::fabs(total - 1.0) > 1e-9)
            throw std::invalid_argument("NotOnSimplex: coordinates must sum to 1");
        for (double& c : v) c /= total;
        if (weights[i] < -kMergeTol)
            throw std::invalid_argument("NegativeWeight: weights must be >= 0");
    }

    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return vec_less(support[a], support[b]);
    });

    SimplexDist d;
    for (std::size_t r : idx) {
        if (weights[r] <= 0.0) continue;
        if (!d.support.empty() && vec_close(d.support.back(), support[r])) {
            d.weights.back() += weights[r];
        } else {
            d.support.push_back(support[r]);
            d.weights.push_back(weights[r]);
        }
    }
    if (d.support.empty())
        throw std::invalid_argument("EmptySupport: no atoms with positive weight");

    double total = std::accumulate(d.weights.begin(), d.weights.end(), 0.0);
    for (double& w : d.weights) w /= total;

    d.mean.assign(k, 0.0);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t y = 0; y < k; ++y) d.mean[y] += d.weights[i] * d.support[i][y];
    return d;
}

SimplexDist simplex_point_mass(std::vector<double> q) {
    return make_simplex_dist({std::move(q)}, {1.0});
}

SimplexDist embed_scalar(const PosteriorDist& d) {
    std::vector<std::vector<double>> support;
    support.reserve(d.size());
    for (double q : d.support) support.push_back({1.0 - q, q});
    return make_simplex_dist(std::move(support), d.weights);
}

DecisionProblemK make_decision_problem_k(std::vector<std::string> actions,
                                         std::vector<std::vector<double>> payoff) {
    if (actions.empty() || actions.size() != payoff.size())
        throw std::invalid_argument("OutOfRange: need >= 1 action with payoff rows");
    const std::size_t k = payoff[0].size();
    for (const auto& row : payoff) {
        if (row.size() != k)
            throw std::invalid_argument("OutOfRange: ragged payoff rows");
        for (double u : row)
            if (!std::isfinite(u))
                throw std::invalid_argument("OutOfRange: payoff entries must be finite");
    }
    return {std::move(actions), std::move(payoff)};
}

double indirect_value_k(const DecisionProblemK& dp, const std::vector<double>& q) {
    double total = 0.0;
    for (double c : q) {
        if (c < -1e-9) throw std::invalid_argument("NotOnSimplex: negative coordinate");
        total += c;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("NotOnSimplex: coordinates must sum to 1");

    double best = -std::numeric_limits<double>::infinity();
    for (const auto& row : dp.payoff) {
        double v = 0.0;
        for (std::size_t y = 0; y < q.size(); ++y) v += q[y] * row[y];
        best = std::max(best, v);
    }
    return best;
}

double welfare_k(const DecisionProblemK& dp, const SimplexDist& d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += d.weights[i] * indirect_value_k(dp, d.support[i]);
    return s;
}

double CxWitness::eval(const std::vector<double>& x) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& g : gradients) {
        double v = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) v += g[i] * x[i];
        best = std::max(best, v);
    }
    return best;
}

namespace {

// Feasibility of "b is a mean-preserving contraction of a": joint weights
// pi(i,j) >= 0 with row marginals a.weights and, for every column j,
// sum_i pi(i,j) a_i = bw_j * b_j componentwise. Column marginals are implied
// because support vectors sum to 1. On infeasibility, the Farkas duals give
// a max-of-linear-functions witness phi with E_b[phi] > E_a[phi].
struct Direction {
    bool feasible = false;
    std::optional<CxWitness> witness;
};

Direction contraction_feasible(const SimplexDist& a, const SimplexDist& b,
                               double feas_tol) {
    const std::size_t na = a.size(), nb = b.size(), k = a.dim();
    const std::size_t nvar = na * nb;
    const std::size_t nrow = na + nb * k;

    std::vector<std::vector<double>> mat(nrow, std::vector<double>(nvar, 0.0));
    std::vector<double> rhs(nrow, 0.0);

    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) mat[i][i * nb + j] = 1.0;
        rhs[i] = a.weights[i];
    }
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t y = 0; y < k; ++y) {
            std::size_t row = na + j * k + y;
            for (std::size_t i = 0; i < na; ++i)
                mat[row][i * nb + j] = a.support[i][y];
            rhs[row] = b.weights[j] * b.support[j][y];
        }
    }

    auto res = lp::solve_equality_feasibility(mat, rhs, feas_tol);
    Direction d;
    d.feasible = res.feasible;
    if (!res.feasible && res.farkas.size() == nrow) {
        // Farkas components: u_i on the row marginals, z_{j,y} on the
        // martingale rows. phi(x) = max_j z_j . x satisfies
        // E_b[phi] > E_a[phi].
        CxWitness w;
        w.gradients.resize(nb, std::vector<double>(k, 0.0));
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t y = 0; y < k; ++y)
                w.gradients[j][y] = res.farkas[na + j * k + y];
        double eb = 0.0, ea = 0.0;
        for (std::size_t j = 0; j < nb; ++j) eb += b.weights[j] * w.eval(b.support[j]);
        for (std::size_t i = 0; i < na; ++i) ea += a.weights[i] * w.eval(a.support[i]);
        w.margin = eb - ea;
        if (w.margin > 0.0) d.witness = std::move(w);
    }
    return d;
}

}  // namespace

CxResultK cx_compare_k(const SimplexDist& a, const SimplexDist& b,
                       double mean_tol, double feas_tol) {
    CxResultK r;
    if (a.dim() != b.dim())
        throw std::invalid_argument("NotOnSimplex: dimension mismatch");
    for (std::size_t y = 0; y < a.dim(); ++y) {
        if (std::fabs(a.mean[y] - b.mean[y]) > mean_tol) {
            r.order = CxOrder::MeansDiffer;
            return r;
        }
    }

    Direction ab = contraction_feasible(a, b, feas_tol);  // A dominates B?
    Direction ba = contraction_feasible(b, a, feas_tol);  // B dominates A?

    if (ab.feasible && ba.feasible) r.order = CxOrder::Equal;
    else if (ab.feasible) r.order = CxOrder::ADominates;
    else if (ba.feasible) r.order = CxOrder::BDominates;
    else r.order = CxOrder::Incomparable;

    if (!ab.feasible) r.witness_a = std::move(ab.witness);
    if (!ba.feasible) r.witness_b = std::move(ba.witness);
    return r;
}

bool dv_check_k(const std::function<double(const std::vector<double>&)>& h0,
                const std::function<double(const std::vector<double>&)>& h1,
                const std::vector<std::vector<double>>& supports, double tol,
                int n_chords, std::uint64_t seed) {
    if (supports.size() < 2)
        throw std::invalid_argument("EmptySupport: need >= 2 points for chords");
    const std::size_t k = supports[0].size();

    SplitMix64 rng(seed);
    auto random_point = [&]() {
        // Random convex combination of the given points.
        std::vector<double> coef(supports.size());
        double total = 0.0;
        for (double& c : coef) {
            c = rng.uniform();
            total += c;
        }
        std::vector<double> x(k, 0.0);
        for (std::size_t s = 0; s < supports.size(); ++s)
            for (std::size_t y = 0; y < k; ++y)
                x[y] += coef[s] / total * supports[s][y];
        return x;
    };

    auto delta = [&](const std::vector<double>& x) { return h1(x) - h0(x); };

    for (int c = 0; c < n_chords; ++c) {
        auto xa = random_point();
        auto xb = random_point();
        std::vector<double> mid(k);
        for (std::size_t y = 0; y < k; ++y) mid[y] = 0.5 * (xa[y] + xb[y]);
        if (delta(mid) > 0.5 * (delta(xa) + delta(xb)) + tol) return false;
    }
    return true;
}

}  // namespace infodesign
