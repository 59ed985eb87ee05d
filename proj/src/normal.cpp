#include "pnsbounds/normal.hpp"

#include <cmath>
#include <stdexcept>

namespace pnsbounds {

namespace {

// Acklam's rational approximation to the normal quantile,
// |relative error| < 1.15e-9 over (0, 1).
double acklam_quantile(double q) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double q_low = 0.02425;

    if (q < q_low) {
        double u = std::sqrt(-2.0 * std::log(q));
        return (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
               ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    if (q > 1.0 - q_low) {
        double u = std::sqrt(-2.0 * std::log(1.0 - q));
        return -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
               ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    double u = q - 0.5;
    double r = u * u;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014327;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double inverse_normal_cdf(double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("inverse_normal_cdf: q must lie in (0, 1)");
    }
    double z = acklam_quantile(q);
    double pdf = normal_pdf(z);
    if (pdf > 0.0) {
        z -= (normal_cdf(z) - q) / pdf;  // one Newton refinement
    }
    return z;
}

}  // namespace pnsbounds
