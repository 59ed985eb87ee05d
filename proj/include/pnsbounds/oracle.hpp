#pragma once

#include "pnsbounds/distributions.hpp"
#include "pnsbounds/scm.hpp"

namespace pnsbounds {

/// Exact distributions of a known model, plus the true PNS
/// P(y_x, y'_{x'}) realized on the same enumeration.
struct TrueDistributions {
    ExperimentalDist exp;
    ObservationalDist obs;
    double true_pns = 0.0;
};

/// Selects which informer outputs to compute.
struct InformerRequest {
    bool exp = true;
    bool obs = true;
    bool true_pns = true;

    static InformerRequest all() { return {}; }
};

/// Exact ("informer") distributions by exhaustive enumeration of all 2^22
/// exogenous states.
///
/// Enumeration order: u_z bits are the low 20 bits of a 22-bit counter,
/// then u_x (bit 20), then u_y (bit 21). Accumulation is compensated
/// (Kahan) per fixed 16384-state chunk, with chunks reduced in counter
/// order, so the output is bit-identical for any worker count.
/// threads = 0 uses the hardware concurrency.
TrueDistributions informer(const ScmModel& model, int threads = 0);

/// Same enumeration, restricted to the requested outputs; requested
/// fields match informer() exactly, unrequested fields are left zero.
TrueDistributions informer_sparse(const ScmModel& model, const InformerRequest& request,
                                  int threads = 0);

}  // namespace pnsbounds
