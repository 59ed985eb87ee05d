#pragma once

namespace pnsbounds {

/// Interventional quantities P(y_x) and P(y_{x'}) obtained under
/// randomized treatment. P(y'_{x'}) is always derived as 1 - P(y_{x'}).
struct ExperimentalDist {
    double p_y_do_x = 0.0;       // P(y_x)
    double p_y_do_xprime = 0.0;  // P(y_{x'})

    double p_yprime_do_xprime() const { return 1.0 - p_y_do_xprime; }
};

/// The four joint cells of P(X, Y) under natural treatment assignment.
/// Cells must sum to 1 within 1e-9. P(y) is always derived from the
/// cells, never supplied independently.
struct ObservationalDist {
    double p_xy = 0.0;             // P(x, y)
    double p_xy_prime = 0.0;       // P(x, y')
    double p_xprime_y = 0.0;       // P(x', y)
    double p_xprime_yprime = 0.0;  // P(x', y')

    double p_y() const { return p_xy + p_xprime_y; }
};

/// Throw validation_error unless both probabilities are in [0, 1].
void validate(const ExperimentalDist& exp);

/// Throw validation_error unless all cells are in [0, 1] and sum to 1
/// within absolute tolerance 1e-9.
void validate(const ObservationalDist& obs);

}  // namespace pnsbounds
