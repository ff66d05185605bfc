#pragma once

#include <functional>
#include <string>
#include <vector>

#include "infodesign/common.hpp"

namespace infodesign {

// Discrete distribution of posterior beliefs on [0,1] with mean mu
// (a Bayes-plausible posterior law). Canonical form: support strictly
// increasing, duplicate points merged, zero-weight atoms dropped,
// weights normalised to sum 1.
struct PosteriorDist {
    std::vector<double> support;
    std::vector<double> weights;
    double prior_mean = 0.0;

    std::size_t size() const { return support.size(); }
    double mean() const { return prior_mean; }

    double second_moment() const {
        double s = 0.0;
        for (std::size_t i = 0; i < support.size(); ++i)
            s += weights[i] * support[i] * support[i];
        return s;
    }

    template <typename F>
    double expectation(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < support.size(); ++i)
            s += weights[i] * f(support[i]);
        return s;
    }
};

// Builds the canonical distribution. Weights are auto-normalised.
// Throws std::invalid_argument (EmptySupport / PointOutOfRange /
// NegativeWeight) on bad input.
PosteriorDist make_dist(const std::vector<double>& points,
                        const std::vector<double>& weights);

PosteriorDist point_mass(double q);

// Convenience constructor: atoms at i/(n-1) weighted by w(q) >= 0.
PosteriorDist make_grid_dist(int n, const std::function<double(double)>& w);

// Mixture of distributions with the given (auto-normalised) probabilities.
PosteriorDist mix(const std::vector<PosteriorDist>& dists,
                  const std::vector<double>& probs);

// The two-point law {0, q_high} with mean mu; second moment mu*q_high.
// Requires 0 < mu <= q_high <= 1 (InvalidGeometry otherwise).
PosteriorDist two_point(double mu, double q_high);

// Stop-loss transform E[(Q - k)_+], k in [0,1].
double stop_loss(const PosteriorDist& d, double k);

enum class CxOrder { ADominates, BDominates, Equal, Incomparable, MeansDiffer };

const char* to_string(CxOrder o);

// Convex-order comparison for discrete laws. Means are compared first;
// then the stop-loss curves are compared on the union of both supports
// plus {0,1}. Both curves are piecewise linear with kinks only at their
// own support points, so agreement/dominance on that grid is exact.
CxOrder convex_order_compare(const PosteriorDist& a, const PosteriorDist& b,
                             double mean_tol = kDefaultTol.mean,
                             double prob_tol = kDefaultTol.prob);

// Row-stochastic kernel: rows indexed by source support points, columns by
// garbled signal labels.
struct GarblingKernel {
    std::vector<std::vector<double>> rows;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return rows.empty() ? 0 : rows[0].size(); }
};

GarblingKernel make_kernel(std::vector<std::vector<double>> rows);
GarblingKernel identity_kernel(std::size_t n);

// Treats d as the canonical signal (P(S=q_i)=w_i, P(Y=1|S=q_i)=q_i) and
// returns the posterior law of the garbled signal. Mean is preserved;
// zero-mass columns are dropped.
PosteriorDist garble(const PosteriorDist& d, const GarblingKernel& k);

}  // namespace infodesign
