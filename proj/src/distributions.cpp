#include "pnsbounds/distributions.hpp"

#include <cmath>
#include <string>

#include "pnsbounds/errors.hpp"

namespace pnsbounds {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw validation_error(std::string(what) + " = " + std::to_string(p) +
                               " is not a probability in [0, 1]");
    }
}

}  // namespace

void validate(const ExperimentalDist& exp) {
    check_probability(exp.p_y_do_x, "P(y_x)");
    check_probability(exp.p_y_do_xprime, "P(y_x')");
}

void validate(const ObservationalDist& obs) {
    check_probability(obs.p_xy, "P(x,y)");
    check_probability(obs.p_xy_prime, "P(x,y')");
    check_probability(obs.p_xprime_y, "P(x',y)");
    check_probability(obs.p_xprime_yprime, "P(x',y')");
    double total = obs.p_xy + obs.p_xy_prime + obs.p_xprime_y + obs.p_xprime_yprime;
    if (std::abs(total - 1.0) > 1e-9) {
        throw validation_error("observational cells sum to " + std::to_string(total) +
                               ", expected 1 within 1e-9");
    }
}

}  // namespace pnsbounds
