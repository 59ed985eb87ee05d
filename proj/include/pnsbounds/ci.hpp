#pragma once

#include <array>
#include <cstdint>

#include "pnsbounds/distributions.hpp"

namespace pnsbounds {

/// Significance level together with the matching standard-normal
/// quantile z_{1-alpha/2}.
struct ConfidenceSpec {
    double alpha;
    double z;

    /// Canonical construction: z = inverse_normal_cdf(1 - alpha/2).
    static ConfidenceSpec from_alpha(double alpha);

    /// Pins z explicitly (e.g. the z-table value 1.96) instead of the
    /// computed quantile. Used by the planner's rounded-z mode.
    static ConfidenceSpec with_fixed_z(double alpha, double z);
};

/// Margins of error propagated through the eight bound arms.
///
/// A k-term arm's margin is exactly the sum of its term margins;
/// worst_case_margin is z*(sqrt(1/m)+sqrt(1/n)) and dominates every arm.
struct MarginReport {
    std::array<double, 4> per_arm_margins_lower{};
    std::array<double, 4> per_arm_margins_upper{};
    double worst_case_margin = 0.0;
    std::int64_t m = 0;  // experimental sample count
    std::int64_t n = 0;  // observational sample count
};

/// Wald half-width z*sqrt(p_hat*(1-p_hat)/count). Throws validation_error
/// for count < 1 or p_hat outside [0, 1].
double wald_margin(double p_hat, std::int64_t count, const ConfidenceSpec& conf);

/// Supremum of wald_margin over p_hat: (z/2)*sqrt(1/count).
double worst_case_term_margin(std::int64_t count, const ConfidenceSpec& conf);

/// Worst-case margin of the PNS bounds: z*(sqrt(1/m)+sqrt(1/n)).
double theorem_margin(std::int64_t m, std::int64_t n, const ConfidenceSpec& conf);

/// Per-arm margins for estimated distributions. Experimental terms use
/// count m; observational terms, including the derived P(y) treated as a
/// single Bernoulli proportion, use count n.
MarginReport arm_margins(const ExperimentalDist& exp_hat, const ObservationalDist& obs_hat,
                         std::int64_t m, std::int64_t n, const ConfidenceSpec& conf);

}  // namespace pnsbounds
