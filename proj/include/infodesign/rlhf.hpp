#pragma once

#include <map>
#include <string>
#include <vector>

#include "infodesign/beliefs.hpp"

namespace infodesign {

struct Completion {
    std::string label;
    double base_prob = 0.0;
    std::vector<double> quality;  // K components, each in [0,1]
    double spurious = 0.0;
};

// Finite-support generator for a single prompt: the base policy pi_0 over
// completions, each carrying a quality vector and a spurious score.
struct Generator {
    std::string prompt;
    std::vector<Completion> completions;

    std::size_t n() const { return completions.size(); }
    std::size_t quality_dim() const {
        return completions.empty() ? 0 : completions[0].quality.size();
    }
};

Generator make_generator(std::vector<Completion> completions,
                         std::string prompt = "");

// Reward r(z) = alpha * (w . q(z)) + (1 - alpha) * s(z); w on the simplex.
struct RewardSpec {
    std::vector<double> weights;
    double alpha = 1.0;

    double reward(const Completion& c) const;
};

RewardSpec make_reward(std::vector<double> weights, double alpha);
RewardSpec aligned_reward(std::vector<double> weights);  // alpha = 1

// Exponential tilt pi(z) ∝ pi_0(z) exp(r(z)/lambda), computed in log space
// with max-subtraction. lambda below 1e-6 is rejected.
Generator tilt(const Generator& g, const RewardSpec& r, double lambda);

// Law of the scalar projection w . q(Z) under the generator's probabilities.
PosteriorDist induced_quality_dist(const Generator& g,
                                   const std::vector<double>& w);
// K = 1 convenience.
PosteriorDist induced_quality_dist(const Generator& g);

// Survival-function comparison at every union support point:
// true iff P_a(Q >= t) >= P_b(Q >= t) - tol throughout.
bool fosd_check(const PosteriorDist& a, const PosteriorDist& b,
                double tol = 1e-12);

struct CapabilityTax {
    double best_eval = 0.0;
    double achieved_eval = 0.0;
    double tax = 0.0;
};

// best_eval = max_z w_eval . q(z); achieved_eval = the tilted expectation of
// w_eval . q(Z) when training tilts toward the aligned w_train reward.
CapabilityTax capability_tax(const Generator& g,
                             const std::vector<double>& w_train,
                             const std::vector<double>& w_eval, double lambda);

// Largest lambda (up to an internal cap) below which the capability tax
// exceeds eps. Requires distinct strict maximisers of the two
// scalarisations, with the eval-optimum strictly better under w_eval than
// the train-optimum; throws NoTaxRegime otherwise.
double find_lambda_bar(const Generator& g, const std::vector<double>& w_train,
                       const std::vector<double>& w_eval, double eps);

// m(q) = E[exp((1-alpha) S / lambda) | Q = q] under the base probabilities,
// fibering completions by their scalar quality (K = 1 generators).
std::map<double, double> goodhart_tilt_factor(const Generator& g, double alpha,
                                              double lambda);

// Accept/regenerate indirect value V(q) = max(q(1+c) - c, -d).
double accept_regenerate_value(double q, double c, double d);

// The built-in three-completion instance where the misspecified reward
// (alpha = 0.6) favours a rare spurious completion: probs .49/.49/.02,
// quality .9/.6/.4, spurious .2/.3/1.0. Base mean quality 0.743.
Generator goodhart_example();
inline constexpr double kGoodhartAlpha = 0.6;

}  // namespace infodesign
