#include "pnsbounds/bounds.hpp"

#include <algorithm>

namespace pnsbounds {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

PnsBounds pns_bounds(const ExperimentalDist& exp, const ObservationalDist& obs) {
    validate(exp);
    validate(obs);

    const double p_y_x = exp.p_y_do_x;
    const double p_y_xp = exp.p_y_do_xprime;
    const double p_y = obs.p_y();

    PnsBounds out;
    out.lower_arms = {0.0, p_y_x - p_y_xp, p_y - p_y_xp, p_y_x - p_y};
    out.upper_arms = {p_y_x, 1.0 - p_y_xp, obs.p_xy + obs.p_xprime_yprime,
                      p_y_x - p_y_xp + obs.p_xy_prime + obs.p_xprime_y};

    const double raw_lower = *std::max_element(out.lower_arms.begin(), out.lower_arms.end());
    const double raw_upper = *std::min_element(out.upper_arms.begin(), out.upper_arms.end());
    out.lower = clamp01(raw_lower);
    out.upper = clamp01(raw_upper);
    out.consistent = raw_lower <= raw_upper;
    return out;
}

}  // namespace pnsbounds
