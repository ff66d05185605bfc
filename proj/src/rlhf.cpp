#include "infodesign/rlhf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "infodesign/common.hpp"
#include "infodesign/errors.hpp"

namespace infodesign {

namespace {

constexpr double kMinLambda = 1e-6;
constexpr double kLambdaBarCap = 1e6;

void check_simplex_weights(const std::vector<double>& w, std::size_t k) {
    if (w.size() != k)
        throw std::invalid_argument("OutOfRange: weight vector length != quality dim");
    double total = 0.0;
    for (double x : w) {
        if (x < -1e-12)
            throw std::invalid_argument("NegativeWeight: reward weights must be >= 0");
        total += x;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("OutOfRange: reward weights must sum to 1");
}

void check_lambda(double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("NonpositiveLambda: tilt needs lambda > 0");
    if (lambda < kMinLambda)
        throw std::invalid_argument("NonpositiveLambda: lambda below 1e-6 is rejected");
}

double dot(const std::vector<double>& w, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * q[i];
    return s;
}

}  // namespace

Generator make_generator(std::vector<Completion> completions, std::string prompt) {
    if (completions.empty())
        throw std::invalid_argument("EmptySupport: generator needs completions");
    const std::size_t k = completions[0].quality.size();
    if (k == 0)
        throw std::invalid_argument("OutOfRange: quality vectors must have K >= 1");
    double total = 0.0;
    for (const auto& c : completions) {
        if (c.base_prob < -1e-12)
            throw std::invalid_argument("NegativeWeight: base_prob < 0");
        if (c.quality.size() != k)
            throw std::invalid_argument("OutOfRange: quality dimension mismatch");
        for (double q : c.quality)
            if (q < 0.0 || q > 1.0)
                throw std::invalid_argument("OutOfRange: quality components in [0,1]");
        total += c.base_prob;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("OutOfRange: base probabilities must sum to 1");
    for (auto& c : completions) c.base_prob = std::max(c.base_prob, 0.0) / total;
    return Generator{std::move(prompt), std::move(completions)};
}

double RewardSpec::reward(const Completion& c) const {
    return alpha * dot(weights, c.quality) + (1.0 - alpha) * c.spurious;
}

RewardSpec make_reward(std::vector<double> weights, double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("OutOfRange: alpha must lie in [0,1]");
    RewardSpec r{std::move(weights), alpha};
    return r;
}

RewardSpec aligned_reward(std::vector<double> weights) {
    return make_reward(std::move(weights), 1.0);
}

Generator tilt(const Generator& g, const RewardSpec& r, double lambda) {
    check_lambda(lambda);
    check_simplex_weights(r.weights, g.quality_dim());

    std::vector<double> logw(g.n(), -inf());
    double shift = -inf();
    for (std::size_t i = 0; i < g.n(); ++i) {
        const auto& c = g.completions[i];
        if (c.base_prob <= 0.0) continue;
        logw[i] = std::log(c.base_prob) + r.reward(c) / lambda;
        shift = std::max(shift, logw[i]);
    }

    Generator out = g;
    double total = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) {
        double w = logw[i] == -inf() ? 0.0 : std::exp(logw[i] - shift);
        out.completions[i].base_prob = w;
        total += w;
    }
    for (auto& c : out.completions) c.base_prob /= total;
    return out;
}

PosteriorDist induced_quality_dist(const Generator& g,
                                   const std::vector<double>& w) {
    check_simplex_weights(w, g.quality_dim());
    std::vector<double> points, probs;
    points.reserve(g.n());
    probs.reserve(g.n());
    for (const auto& c : g.completions) {
        points.push_back(dot(w, c.quality));
        probs.push_back(c.base_prob);
    }
    return make_dist(points, probs);
}

PosteriorDist induced_quality_dist(const Generator& g) {
    if (g.quality_dim() != 1)
        throw std::invalid_argument("OutOfRange: scalar overload needs K = 1");
    return induced_quality_dist(g, {1.0});
}

bool fosd_check(const PosteriorDist& a, const PosteriorDist& b, double tol) {
    std::vector<double> grid = a.support;
    grid.insert(grid.end(), b.support.begin(), b.support.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    auto survival = [](const PosteriorDist& d, double t) {
        double s = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d.support[i] >= t - 1e-12) s += d.weights[i];
        return s;
    };
    for (double t : grid)
        if (survival(a, t) < survival(b, t) - tol) return false;
    return true;
}

CapabilityTax capability_tax(const Generator& g,
                             const std::vector<double>& w_train,
                             const std::vector<double>& w_eval, double lambda) {
    check_simplex_weights(w_eval, g.quality_dim());
    Generator tilted = tilt(g, aligned_reward(w_train), lambda);

    CapabilityTax t;
    t.best_eval = -inf();
    for (const auto& c : g.completions)
        if (c.base_prob > 0.0) t.best_eval = std::max(t.best_eval, dot(w_eval, c.quality));
    t.achieved_eval = 0.0;
    for (const auto& c : tilted.completions)
        t.achieved_eval += c.base_prob * dot(w_eval, c.quality);
    t.tax = t.best_eval - t.achieved_eval;
    return t;
}

double find_lambda_bar(const Generator& g, const std::vector<double>& w_train,
                       const std::vector<double>& w_eval, double eps) {
    check_simplex_weights(w_train, g.quality_dim());
    check_simplex_weights(w_eval, g.quality_dim());
    if (!(eps > 0.0)) throw std::invalid_argument("OutOfRange: eps must be > 0");

    auto strict_argmax = [&](const std::vector<double>& w) -> int {
        int best = -1;
        double best_v = -inf();
        bool unique = true;
        for (std::size_t i = 0; i < g.n(); ++i) {
            if (g.completions[i].base_prob <= 0.0) continue;
            double v = dot(w, g.completions[i].quality);
            if (v > best_v + 1e-12) {
                best_v = v;
                best = static_cast<int>(i);
                unique = true;
            } else if (v > best_v - 1e-12) {
                unique = false;
            }
        }
        return unique ? best : -1;
    };

    int z_train = strict_argmax(w_train);
    int z_eval = strict_argmax(w_eval);
    if (z_train < 0 || z_eval < 0)
        throw NoTaxRegime("NoTaxRegime: scalarisation maximiser is not strict");
    if (z_train == z_eval)
        throw NoTaxRegime("NoTaxRegime: the two scalarisations share their maximiser");
    double eval_at_eval = dot(w_eval, g.completions[z_eval].quality);
    double eval_at_train = dot(w_eval, g.completions[z_train].quality);
    if (!(eval_at_eval > eval_at_train + 1e-12))
        throw NoTaxRegime("NoTaxRegime: eval objective does not separate the maximisers");

    auto tax_at = [&](double lambda) {
        return capability_tax(g, w_train, w_eval, lambda).tax;
    };

    // The small-lambda limit of the tax is eval_at_eval - eval_at_train > 0.
    if (eps >= eval_at_eval - eval_at_train)
        throw NoTaxRegime("NoTaxRegime: eps exceeds the small-lambda tax limit");

    double lo = kMinLambda;
    if (tax_at(lo) <= eps)
        throw NoTaxRegime("NoTaxRegime: no tax above eps at the smallest lambda");
    double hi = kLambdaBarCap;
    if (tax_at(hi) > eps) return hi;  // the whole probed range is taxed

    for (int it = 0; it < 200; ++it) {
        double mid = std::sqrt(lo * hi);  // bisect in log space
        if (tax_at(mid) > eps) lo = mid; else hi = mid;
    }
    return lo;
}

std::map<double, double> goodhart_tilt_factor(const Generator& g, double alpha,
                                              double lambda) {
    check_lambda(lambda);
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("OutOfRange: alpha must lie in [0,1]");
    if (g.quality_dim() != 1)
        throw std::invalid_argument("OutOfRange: goodhart_tilt_factor needs K = 1");

    // Group completions into fibers of equal scalar quality (same merge
    // tolerance as make_dist) and average exp((1-alpha) s / lambda) with the
    // base probabilities, in log space.
    std::vector<std::pair<double, const Completion*>> order;
    for (const auto& c : g.completions)
        if (c.base_prob > 0.0) order.emplace_back(c.quality[0], &c);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::map<double, double> m;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && order[j + 1].first - order[i].first <= 1e-12) ++j;
        double shift = -inf();
        for (std::size_t t = i; t <= j; ++t) {
            double e = (1.0 - alpha) * order[t].second->spurious / lambda;
            shift = std::max(shift, e);
        }
        double num = 0.0, den = 0.0;
        for (std::size_t t = i; t <= j; ++t) {
            double e = (1.0 - alpha) * order[t].second->spurious / lambda;
            num += order[t].second->base_prob * std::exp(e - shift);
            den += order[t].second->base_prob;
        }
        m[order[i].first] = std::exp(shift) * num / den;
        i = j + 1;
    }
    return m;
}

double accept_regenerate_value(double q, double c, double d) {
    if (!(c > 0.0) || d < 0.0 || q < 0.0 || q > 1.0)
        throw std::invalid_argument("InvalidParams: need c > 0, d >= 0, q in [0,1]");
    return std::max(q * (1.0 + c) - c, -d);
}

Generator goodhart_example() {
    return make_generator(
        {
            {"z1", 0.49, {0.9}, 0.2},
            {"z2", 0.49, {0.6}, 0.3},
            {"z3", 0.02, {0.4}, 1.0},
        },
        "goodhart");
}

}  // namespace infodesign
