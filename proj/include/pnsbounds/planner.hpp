#pragma once

#include <cstdint>
#include <string>

#include "pnsbounds/ci.hpp"

namespace pnsbounds {

enum class PlanKind { full_bounds, k_term, single_term };

std::string to_string(PlanKind kind);

/// Minimal sample sizes achieving a target margin of error.
///
/// Minimality contract: the achieved margin at (m, n) is <= epsilon and
/// the margin at one sample less per pool is > epsilon.
struct SamplePlan {
    std::int64_t m = 0;  // experimental samples
    std::int64_t n = 0;  // observational samples
    double alpha = 0.0;
    double epsilon = 0.0;
    PlanKind kind = PlanKind::full_bounds;
    int k = 0;  // number of worst-case terms (k-term plans)
    double achieved_margin = 0.0;
};

/// Feasibility region of margin-targeted planning: any (m, n) with
/// sqrt(1/m) + sqrt(1/n) <= threshold achieves the target margin, where
/// threshold = epsilon / z.
struct PlanConstraint {
    double alpha = 0.0;
    double epsilon = 0.0;
    double z = 0.0;
    double threshold = 0.0;

    /// Smallest n such that (m, n) is feasible; throws validation_error
    /// when no finite n satisfies the constraint for this m.
    std::int64_t min_n_given_m(std::int64_t m) const;
};

/// Equal-allocation plan for the full bounds: m = n = ceil((2z/epsilon)^2).
SamplePlan plan_equal(double alpha, double epsilon);
SamplePlan plan_equal(double alpha, double epsilon, const ConfidenceSpec& conf);

PlanConstraint plan_constraint(double alpha, double epsilon);
PlanConstraint plan_constraint(double alpha, double epsilon, const ConfidenceSpec& conf);

/// Plan for an expression of k worst-case Bernoulli terms drawn from one
/// sample pool: size = ceil((k*z/(2*epsilon))^2), reported for both pools.
SamplePlan plan_k_term(int k, double alpha, double epsilon);
SamplePlan plan_k_term(int k, double alpha, double epsilon, const ConfidenceSpec& conf);

/// Margin of a k-term worst-case expression at the given pool size:
/// k * (z/2) * sqrt(1/count).
double k_term_margin(int k, std::int64_t count, const ConfidenceSpec& conf);

}  // namespace pnsbounds
