#pragma once

#include <stdexcept>

namespace pnsbounds {

// Invalid distribution, model, or count input. Maps to CLI exit code 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An experimental treatment arm has no samples, so the conditional
// frequency estimator of P(y_x) or P(y_{x'}) is undefined. Maps to CLI
// exit code 3.
struct empty_arm_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pnsbounds
