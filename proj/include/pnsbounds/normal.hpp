#pragma once

namespace pnsbounds {

/// Standard normal CDF via erfc.
double normal_cdf(double x);

/// Standard normal density.
double normal_pdf(double x);

/// Quantile of the standard normal distribution.
///
/// Acklam's rational approximation refined with one Newton step on
/// normal_cdf; the result z satisfies |normal_cdf(z) - q| <= 1e-8.
/// Throws std::domain_error for q outside (0, 1).
double inverse_normal_cdf(double q);

}  // namespace pnsbounds
