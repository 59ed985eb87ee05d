#pragma once

#include <cstdint>

#include "pnsbounds/distributions.hpp"
#include "pnsbounds/oracle.hpp"
#include "pnsbounds/rng.hpp"
#include "pnsbounds/scm.hpp"

namespace testutil {

using namespace pnsbounds;

inline ExperimentalDist random_exp(SplitMix64& rng) {
    return {rng.next_unit(), rng.next_unit()};
}

inline ObservationalDist random_obs(SplitMix64& rng) {
    double u[4];
    double sum = 0.0;
    for (double& v : u) {
        v = rng.next_unit() + 1e-12;
        sum += v;
    }
    return {u[0] / sum, u[1] / sum, u[2] / sum, u[3] / sum};
}

struct ReferenceInformer {
    TrueDistributions dist;
    double p_y_direct = 0.0;  // P(Y=1) enumerated as its own accumulator
};

// Slow reference enumeration over all 2^22 exogenous states, using only
// the public structural equations, with single (unchunked) compensated
// accumulators. Kept deliberately naive; the production informer must
// agree with it to ~1e-12.
inline ReferenceInformer informer_reference(const ScmModel& model) {
    struct Kahan {
        double sum = 0.0, comp = 0.0;
        void add(double v) {
            double y = v - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    };
    Kahan p_y_do_x, p_y_do_xprime, p_xy, p_xy_prime, p_xprime_y, p_xprime_yprime, pns, p_y_direct;

    const std::uint64_t states = std::uint64_t{1} << (kNumConfounders + 2);
    for (std::uint64_t s = 0; s < states; ++s) {
        const std::uint32_t z = static_cast<std::uint32_t>(s) & ((1u << kNumConfounders) - 1);
        const bool u_x = (s >> kNumConfounders) & 1;
        const bool u_y = (s >> (kNumConfounders + 1)) & 1;

        double w = 1.0;
        for (int i = 0; i < kNumConfounders; ++i) {
            w *= (z >> i & 1u) ? model.theta_z[i] : 1.0 - model.theta_z[i];
        }
        w *= u_x ? model.theta_x : 1.0 - model.theta_x;
        w *= u_y ? model.theta_y : 1.0 - model.theta_y;

        const bool y1 = f_y(model, true, z, u_y);
        const bool y0 = f_y(model, false, z, u_y);
        const bool x_obs = f_x(model, z, u_x);
        const bool y_obs = x_obs ? y1 : y0;

        if (y1) p_y_do_x.add(w);
        if (y0) p_y_do_xprime.add(w);
        if (x_obs && y_obs) p_xy.add(w);
        if (x_obs && !y_obs) p_xy_prime.add(w);
        if (!x_obs && y_obs) p_xprime_y.add(w);
        if (!x_obs && !y_obs) p_xprime_yprime.add(w);
        if (y1 && !y0) pns.add(w);
        if (y_obs) p_y_direct.add(w);
    }

    ReferenceInformer out;
    out.dist.exp = {p_y_do_x.sum, p_y_do_xprime.sum};
    out.dist.obs = {p_xy.sum, p_xy_prime.sum, p_xprime_y.sum, p_xprime_yprime.sum};
    out.dist.true_pns = pns.sum;
    out.p_y_direct = p_y_direct.sum;
    return out;
}

}  // namespace testutil
