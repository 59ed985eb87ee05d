#include "pnsbounds/ci.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pnsbounds/errors.hpp"
#include "pnsbounds/normal.hpp"

namespace pnsbounds {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
}

void check_count(std::int64_t count, const char* what) {
    if (count < 1) {
        throw validation_error(std::string(what) + " must be a positive sample count, got " +
                               std::to_string(count));
    }
}

}  // namespace

ConfidenceSpec ConfidenceSpec::from_alpha(double alpha) {
    check_alpha(alpha);
    return {alpha, inverse_normal_cdf(1.0 - alpha / 2.0)};
}

ConfidenceSpec ConfidenceSpec::with_fixed_z(double alpha, double z) {
    check_alpha(alpha);
    if (!(z > 0.0)) {
        throw std::domain_error("z must be positive, got " + std::to_string(z));
    }
    return {alpha, z};
}

double wald_margin(double p_hat, std::int64_t count, const ConfidenceSpec& conf) {
    check_count(count, "count");
    if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
        throw validation_error("p_hat must lie in [0, 1], got " + std::to_string(p_hat));
    }
    return conf.z * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(count));
}

double worst_case_term_margin(std::int64_t count, const ConfidenceSpec& conf) {
    check_count(count, "count");
    return (conf.z / 2.0) * std::sqrt(1.0 / static_cast<double>(count));
}

double theorem_margin(std::int64_t m, std::int64_t n, const ConfidenceSpec& conf) {
    check_count(m, "m");
    check_count(n, "n");
    return conf.z * (std::sqrt(1.0 / static_cast<double>(m)) +
                     std::sqrt(1.0 / static_cast<double>(n)));
}

MarginReport arm_margins(const ExperimentalDist& exp_hat, const ObservationalDist& obs_hat,
                         std::int64_t m, std::int64_t n, const ConfidenceSpec& conf) {
    validate(exp_hat);
    validate(obs_hat);
    check_count(m, "m");
    check_count(n, "n");

    // Terms of the eight arms; experimental proportions carry count m,
    // observational ones (including the derived P(y)) carry count n.
    const double e_y_x = wald_margin(exp_hat.p_y_do_x, m, conf);
    const double e_y_xp = wald_margin(exp_hat.p_y_do_xprime, m, conf);
    const double e_yp_xp = wald_margin(exp_hat.p_yprime_do_xprime(), m, conf);
    // The derived P(y) may drift out of [0,1] by the cells' 1e-9 slack.
    const double e_y = wald_margin(std::clamp(obs_hat.p_y(), 0.0, 1.0), n, conf);
    const double e_xy = wald_margin(obs_hat.p_xy, n, conf);
    const double e_xyp = wald_margin(obs_hat.p_xy_prime, n, conf);
    const double e_xpy = wald_margin(obs_hat.p_xprime_y, n, conf);
    const double e_xpyp = wald_margin(obs_hat.p_xprime_yprime, n, conf);

    MarginReport report;
    report.per_arm_margins_lower = {0.0,                // constant arm
                                    e_y_x + e_y_xp,     // P(y_x) - P(y_{x'})
                                    e_y + e_y_xp,       // P(y) - P(y_{x'})
                                    e_y_x + e_y};       // P(y_x) - P(y)
    report.per_arm_margins_upper = {e_y_x,              // P(y_x)
                                    e_yp_xp,            // 1 - P(y_{x'})
                                    e_xy + e_xpyp,      // P(x,y) + P(x',y')
                                    e_y_x + e_y_xp + e_xyp + e_xpy};
    report.worst_case_margin = theorem_margin(m, n, conf);
    report.m = m;
    report.n = n;
    return report;
}

}  // namespace pnsbounds
