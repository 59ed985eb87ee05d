#include "pnsbounds/oracle.hpp"

#include <cstdint>
#include <vector>

#include "parallel.hpp"

namespace pnsbounds {

namespace {

// Kahan compensated accumulator. About 4.2M weighted additions feed each
// informer output; plain summation would drift past the 1e-12 identities
// the oracle must satisfy.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct Partials {
    KahanSum p_y_do_x;
    KahanSum p_y_do_xprime;
    KahanSum p_xy;
    KahanSum p_xy_prime;
    KahanSum p_xprime_y;
    KahanSum p_xprime_yprime;
    KahanSum pns;
};

// Per-z tables built by doubling over the confounder bits in ascending
// index order, so every entry carries exactly the rounding of the literal
// ascending-index accumulation used by m_x/m_y and the per-state weight
// product.
struct ZTables {
    std::vector<double> m_x;
    std::vector<double> m_y;
    std::vector<double> weight;
};

ZTables build_z_tables(const ScmModel& model) {
    const std::size_t size = std::size_t{1} << kNumConfounders;
    ZTables t;
    t.m_x.assign(size, 0.0);
    t.m_y.assign(size, 0.0);
    t.weight.assign(size, 1.0);
    std::size_t filled = 1;
    for (int bit = 0; bit < kNumConfounders; ++bit) {
        const double theta = model.theta_z[bit];
        for (std::size_t z = 0; z < filled; ++z) {
            t.m_x[filled + z] = t.m_x[z] + model.a[bit];
            t.m_y[filled + z] = t.m_y[z] + model.b[bit];
            t.weight[filled + z] = t.weight[z] * theta;
            t.weight[z] *= 1.0 - theta;
        }
        filled <<= 1;
    }
    return t;
}

bool y_region(double v) { return (0.0 < v && v < 1.0) || (1.0 < v && v < 2.0); }

}  // namespace

TrueDistributions informer_sparse(const ScmModel& model, const InformerRequest& request,
                                  int threads) {
    validate(model);
    const ZTables tables = build_z_tables(model);

    // 22-bit state counter: u_z bits low, then u_x, then u_y. Fixed
    // 16384-state chunks keep partial sums identical for any worker count.
    constexpr std::uint64_t kStateCount = std::uint64_t{1} << (kNumConfounders + 2);
    constexpr int kChunks = 256;
    constexpr std::uint64_t kPerChunk = kStateCount / kChunks;
    constexpr std::uint32_t kZMask = (std::uint32_t{1} << kNumConfounders) - 1;

    const bool need_exp = request.exp;
    const bool need_obs = request.obs;
    const bool need_pns = request.true_pns;

    std::vector<Partials> partials(kChunks);
    detail::for_each_chunk(kChunks, threads, [&](int chunk) {
        Partials& p = partials[static_cast<std::size_t>(chunk)];
        const std::uint64_t begin = static_cast<std::uint64_t>(chunk) * kPerChunk;
        const std::uint64_t end = begin + kPerChunk;
        for (std::uint64_t s = begin; s < end; ++s) {
            const std::uint32_t z = static_cast<std::uint32_t>(s) & kZMask;
            const bool u_x = (s >> kNumConfounders) & 1;
            const bool u_y = (s >> (kNumConfounders + 1)) & 1;
            const double w = tables.weight[z] *
                             (u_x ? model.theta_x : 1.0 - model.theta_x) *
                             (u_y ? model.theta_y : 1.0 - model.theta_y);
            const double u_y_val = u_y ? 1.0 : 0.0;
            const bool y_do_x = y_region(model.c + tables.m_y[z] + u_y_val);
            const bool y_do_xp = y_region(tables.m_y[z] + u_y_val);
            if (need_exp) {
                if (y_do_x) p.p_y_do_x.add(w);
                if (y_do_xp) p.p_y_do_xprime.add(w);
            }
            if (need_obs) {
                const bool x_obs = tables.m_x[z] + (u_x ? 1.0 : 0.0) > 0.5;
                const bool y_obs = x_obs ? y_do_x : y_do_xp;
                KahanSum& cell = x_obs ? (y_obs ? p.p_xy : p.p_xy_prime)
                                       : (y_obs ? p.p_xprime_y : p.p_xprime_yprime);
                cell.add(w);
            }
            if (need_pns && y_do_x && !y_do_xp) {
                p.pns.add(w);
            }
        }
    });

    // Reduce in chunk order; fold in each chunk's pending compensation.
    auto total = [&](KahanSum Partials::* member) {
        KahanSum acc;
        for (const Partials& p : partials) {
            acc.add((p.*member).sum);
            acc.add(-(p.*member).comp);
        }
        return acc.sum;
    };

    TrueDistributions out;
    if (need_exp) {
        out.exp.p_y_do_x = total(&Partials::p_y_do_x);
        out.exp.p_y_do_xprime = total(&Partials::p_y_do_xprime);
    }
    if (need_obs) {
        out.obs.p_xy = total(&Partials::p_xy);
        out.obs.p_xy_prime = total(&Partials::p_xy_prime);
        out.obs.p_xprime_y = total(&Partials::p_xprime_y);
        out.obs.p_xprime_yprime = total(&Partials::p_xprime_yprime);
    }
    if (need_pns) {
        out.true_pns = total(&Partials::pns);
    }
    return out;
}

TrueDistributions informer(const ScmModel& model, int threads) {
    return informer_sparse(model, InformerRequest::all(), threads);
}

}  // namespace pnsbounds
