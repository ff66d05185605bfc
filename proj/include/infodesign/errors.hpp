#pragma once

#include <stdexcept>
#include <string>

namespace infodesign {

// Scenario/config validation failure; the message names the offending field.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// check_cost_monotone received a pair that is not ordered in convex order.
struct IncomparablePair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// reversal_threshold: the two pipelines have (numerically) equal mutual
// information, so the attention-savings denominator vanishes.
struct ZeroAttentionSavings : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// find_lambda_bar: the training and evaluation scalarisations share their
// maximiser (or the requested gap is unattainable), so no tax regime exists.
struct NoTaxRegime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// two_point_gap called outside its analysed parameter regime; the message
// names the violated inequality.
struct RegimeViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// solve_two_point given a friction that declares itself non-moment-based.
struct UnsupportedObjective : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace infodesign
