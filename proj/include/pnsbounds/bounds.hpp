#pragma once

#include <array>

#include "pnsbounds/distributions.hpp"

namespace pnsbounds {

/// Tight bounds on PNS = P(y_x, y'_{x'}).
///
/// lower/upper are the envelope values clamped to [0, 1]. The arm arrays
/// keep the raw, unclamped values: finite-sample estimates can push arms
/// outside [0, 1], and downstream error analysis needs them as computed.
struct PnsBounds {
    double lower = 0.0;
    double upper = 0.0;
    // {0, P(y_x)-P(y_{x'}), P(y)-P(y_{x'}), P(y_x)-P(y)}
    std::array<double, 4> lower_arms{};
    // {P(y_x), 1-P(y_{x'}), P(x,y)+P(x',y'), P(y_x)-P(y_{x'})+P(x,y')+P(x',y)}
    std::array<double, 4> upper_arms{};
    // True iff max(lower_arms) <= min(upper_arms) before clamping. False
    // signals the inputs are mutually inconsistent (possible with noisy
    // finite-sample estimates); the result is then not a valid interval.
    bool consistent = true;
};

/// Evaluate the tight PNS bounds for a valid pair of distributions.
/// Throws validation_error if either input violates its invariants.
PnsBounds pns_bounds(const ExperimentalDist& exp, const ObservationalDist& obs);

}  // namespace pnsbounds
