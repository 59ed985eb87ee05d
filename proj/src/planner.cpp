#include "pnsbounds/planner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pnsbounds/errors.hpp"

namespace pnsbounds {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
    }
}

// Smallest positive integer size with margin(size) <= epsilon. Starts from
// the analytic ceiling and nudges by one step in either direction so the
// minimality contract holds exactly in floating point.
template <typename MarginFn>
std::int64_t minimal_size(double raw, double epsilon, MarginFn margin) {
    if (!(raw < 9.0e18)) {
        throw std::domain_error("required sample size exceeds the supported range");
    }
    std::int64_t size = static_cast<std::int64_t>(std::ceil(raw));
    if (size < 1) size = 1;
    while (size > 1 && margin(size - 1) <= epsilon) --size;
    while (margin(size) > epsilon) ++size;
    return size;
}

}  // namespace

std::string to_string(PlanKind kind) {
    switch (kind) {
        case PlanKind::full_bounds: return "full-bounds";
        case PlanKind::k_term: return "k-term";
        case PlanKind::single_term: return "single-term";
    }
    return "unknown";
}

double k_term_margin(int k, std::int64_t count, const ConfidenceSpec& conf) {
    if (k < 1) {
        throw std::domain_error("k must be >= 1, got " + std::to_string(k));
    }
    return static_cast<double>(k) * worst_case_term_margin(count, conf);
}

SamplePlan plan_equal(double alpha, double epsilon) {
    return plan_equal(alpha, epsilon, ConfidenceSpec::from_alpha(alpha));
}

SamplePlan plan_equal(double alpha, double epsilon, const ConfidenceSpec& conf) {
    check_epsilon(epsilon);
    const double raw = std::pow(2.0 * conf.z / epsilon, 2.0);
    const std::int64_t size = minimal_size(raw, epsilon, [&](std::int64_t s) {
        return theorem_margin(s, s, conf);
    });
    return {size, size, alpha, epsilon, PlanKind::full_bounds, 0, theorem_margin(size, size, conf)};
}

PlanConstraint plan_constraint(double alpha, double epsilon) {
    return plan_constraint(alpha, epsilon, ConfidenceSpec::from_alpha(alpha));
}

PlanConstraint plan_constraint(double alpha, double epsilon, const ConfidenceSpec& conf) {
    check_epsilon(epsilon);
    return {alpha, epsilon, conf.z, epsilon / conf.z};
}

std::int64_t PlanConstraint::min_n_given_m(std::int64_t m) const {
    if (m < 1) {
        throw validation_error("m must be a positive sample count, got " + std::to_string(m));
    }
    const double slack = threshold - std::sqrt(1.0 / static_cast<double>(m));
    if (!(slack > 0.0)) {
        throw validation_error("no observational sample size satisfies the constraint for m = " +
                               std::to_string(m));
    }
    auto feasible = [&](std::int64_t n) {
        return std::sqrt(1.0 / static_cast<double>(m)) + std::sqrt(1.0 / static_cast<double>(n)) <=
               threshold;
    };
    const double raw = 1.0 / (slack * slack);
    if (!(raw < 9.0e18)) {
        throw validation_error("no supportable observational sample size for m = " +
                               std::to_string(m));
    }
    std::int64_t n = static_cast<std::int64_t>(std::ceil(raw));
    if (n < 1) n = 1;
    while (n > 1 && feasible(n - 1)) --n;
    while (!feasible(n)) ++n;
    return n;
}

SamplePlan plan_k_term(int k, double alpha, double epsilon) {
    return plan_k_term(k, alpha, epsilon, ConfidenceSpec::from_alpha(alpha));
}

SamplePlan plan_k_term(int k, double alpha, double epsilon, const ConfidenceSpec& conf) {
    check_epsilon(epsilon);
    if (k < 1) {
        throw std::domain_error("k must be >= 1, got " + std::to_string(k));
    }
    const double raw = std::pow(static_cast<double>(k) * conf.z / (2.0 * epsilon), 2.0);
    const std::int64_t size = minimal_size(raw, epsilon, [&](std::int64_t s) {
        return k_term_margin(k, s, conf);
    });
    const PlanKind kind = (k == 1) ? PlanKind::single_term : PlanKind::k_term;
    return {size, size, alpha, epsilon, kind, k, k_term_margin(k, size, conf)};
}

}  // namespace pnsbounds
