#include "infodesign/beliefs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace infodesign {

namespace {

constexpr double kMergeTol = 1e-12;

PosteriorDist canonicalize(std::vector<std::pair<double, double>> atoms) {
    std::sort(atoms.begin(), atoms.end());

    PosteriorDist d;
    for (const auto& [q, w] : atoms) {
        if (w <= 0.0) continue;
        if (!d.support.empty() && q - d.support.back() <= kMergeTol) {
            // Merge duplicates by summing weights; keep the first point.
            d.weights.back() += w;
        } else {
            d.support.push_back(q);
            d.weights.push_back(w);
        }
    }
    if (d.support.empty())
        throw std::invalid_argument("EmptySupport: no atoms with positive weight");

    double total = std::accumulate(d.weights.begin(), d.weights.end(), 0.0);
    for (double& w : d.weights) w /= total;

    d.prior_mean = 0.0;
    for (std::size_t i = 0; i < d.support.size(); ++i)
        d.prior_mean += d.weights[i] * d.support[i];
    return d;
}

}  // namespace

PosteriorDist make_dist(const std::vector<double>& points,
                        const std::vector<double>& weights) {
    if (points.size() != weights.size())
        throw std::invalid_argument("EmptySupport: points/weights length mismatch");
    if (points.empty())
        throw std::invalid_argument("EmptySupport: no points given");

    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double q = points[i];
        double w = weights[i];
        if (q < -kMergeTol || q > 1.0 + kMergeTol)
            throw std::invalid_argument("PointOutOfRange: support point outside [0,1]");
        if (w < -kMergeTol)
            throw std::invalid_argument("NegativeWeight: weights must be >= 0");
        q = std::clamp(q, 0.0, 1.0);
        atoms.emplace_back(q, std::max(w, 0.0));
    }
    return canonicalize(std::move(atoms));
}

PosteriorDist point_mass(double q) { return make_dist({q}, {1.0}); }

PosteriorDist make_grid_dist(int n, const std::function<double(double)>& w) {
    if (n < 2) throw std::invalid_argument("EmptySupport: grid needs n >= 2");
    std::vector<double> pts(n), ws(n);
    for (int i = 0; i < n; ++i) {
        pts[i] = static_cast<double>(i) / (n - 1);
        ws[i] = w(pts[i]);
    }
    return make_dist(pts, ws);
}

PosteriorDist mix(const std::vector<PosteriorDist>& dists,
                  const std::vector<double>& probs) {
    if (dists.size() != probs.size() || dists.empty())
        throw std::invalid_argument("EmptySupport: mixture components/probabilities mismatch");
    double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (total <= 0.0)
        throw std::invalid_argument("NegativeWeight: mixture probabilities must have positive sum");

    std::vector<std::pair<double, double>> atoms;
    for (std::size_t m = 0; m < dists.size(); ++m) {
        if (probs[m] < 0.0)
            throw std::invalid_argument("NegativeWeight: mixture probability < 0");
        for (std::size_t i = 0; i < dists[m].size(); ++i)
            atoms.emplace_back(dists[m].support[i], probs[m] / total * dists[m].weights[i]);
    }
    return canonicalize(std::move(atoms));
}

PosteriorDist two_point(double mu, double q_high) {
    if (!(mu > 0.0) || q_high > 1.0)
        throw std::invalid_argument("InvalidGeometry: need 0 < mu <= q_high <= 1");
    if (q_high < mu)
        throw std::invalid_argument("InvalidGeometry: q_high < mu");
    double w_high = mu / q_high;
    if (w_high >= 1.0) return point_mass(mu);
    return make_dist({0.0, q_high}, {1.0 - w_high, w_high});
}

double stop_loss(const PosteriorDist& d, double k) {
    if (k < 0.0 || k > 1.0)
        throw std::invalid_argument("KOutOfRange: stop-loss threshold outside [0,1]");
    double s = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d.support[i] > k) s += d.weights[i] * (d.support[i] - k);
    return s;
}

const char* to_string(CxOrder o) {
    switch (o) {
        case CxOrder::ADominates: return "A_dominates";
        case CxOrder::BDominates: return "B_dominates";
        case CxOrder::Equal: return "Equal";
        case CxOrder::Incomparable: return "Incomparable";
        case CxOrder::MeansDiffer: return "MeansDiffer";
    }
    return "?";
}

CxOrder convex_order_compare(const PosteriorDist& a, const PosteriorDist& b,
                             double mean_tol, double prob_tol) {
    if (std::fabs(a.mean() - b.mean()) > mean_tol) return CxOrder::MeansDiffer;

    std::vector<double> grid{0.0, 1.0};
    grid.insert(grid.end(), a.support.begin(), a.support.end());
    grid.insert(grid.end(), b.support.begin(), b.support.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    bool a_ge = true, b_ge = true, a_strict = false, b_strict = false;
    for (double k : grid) {
        double diff = stop_loss(a, k) - stop_loss(b, k);
        if (diff < -prob_tol) a_ge = false;
        if (diff > prob_tol) b_ge = false;
        if (diff > prob_tol) a_strict = true;
        if (diff < -prob_tol) b_strict = true;
    }
    if (a_ge && b_ge) return CxOrder::Equal;
    if (a_ge && a_strict) return CxOrder::ADominates;
    if (b_ge && b_strict) return CxOrder::BDominates;
    return CxOrder::Incomparable;
}

GarblingKernel make_kernel(std::vector<std::vector<double>> rows) {
    if (rows.empty())
        throw std::invalid_argument("DimensionMismatch: kernel has no rows");
    const std::size_t cols = rows[0].size();
    if (cols == 0)
        throw std::invalid_argument("DimensionMismatch: kernel has no columns");
    for (auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("DimensionMismatch: ragged kernel rows");
        double total = 0.0;
        for (double p : row) {
            if (p < -kMergeTol)
                throw std::invalid_argument("NegativeWeight: kernel entry < 0");
            total += p;
        }
        if (std::fabs(total - 1.0) > 1e-9)
            throw std::invalid_argument("DimensionMismatch: kernel row does not sum to 1");
        for (double& p : row) p /= total;
    }
    return GarblingKernel{std::move(rows)};
}

GarblingKernel identity_kernel(std::size_t n) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1.0;
    return GarblingKernel{std::move(rows)};
}

PosteriorDist garble(const PosteriorDist& d, const GarblingKernel& k) {
    if (k.n_rows() != d.size())
        throw std::invalid_argument("DimensionMismatch: kernel rows != support size");

    const std::size_t cols = k.n_cols();
    std::vector<std::pair<double, double>> atoms;
    for (std::size_t j = 0; j < cols; ++j) {
        double w = 0.0, qw = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            w += d.weights[i] * k.rows[i][j];
            qw += d.weights[i] * d.support[i] * k.rows[i][j];
        }
        if (w <= 0.0) continue;  // unreachable signal value
        atoms.emplace_back(qw / w, w);
    }
    return canonicalize(std::move(atoms));
}

}  // namespace infodesign
