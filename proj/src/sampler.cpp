#include "pnsbounds/sampler.hpp"

#include <ostream>
#include <string>

#include "pnsbounds/errors.hpp"

namespace pnsbounds {

std::string to_string(BatchKind kind) {
    return kind == BatchKind::experimental ? "experimental" : "observational";
}

ExogenousState draw_exogenous(const ScmModel& model, SplitMix64& stream) {
    ExogenousState state;
    for (int i = 0; i < kNumConfounders; ++i) {
        if (stream.next_unit() < model.theta_z[i]) state.z_bits |= std::uint32_t{1} << i;
    }
    state.u_x = stream.next_unit() < model.theta_x;
    state.u_y = stream.next_unit() < model.theta_y;
    return state;
}

namespace {

void check_size(std::int64_t size, const char* what) {
    if (size < 1) {
        throw validation_error(std::string(what) + " must be >= 1, got " + std::to_string(size));
    }
}

}  // namespace

SampleBatch draw_experimental(const ScmModel& model, std::int64_t m, std::uint64_t seed) {
    validate(model);
    check_size(m, "experimental sample count");
    SampleBatch batch{BatchKind::experimental, {}, seed};
    batch.pairs.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        SplitMix64 stream(substream_seed(seed, static_cast<std::uint64_t>(i)));
        const ExogenousState u = draw_exogenous(model, stream);
        const bool x = stream.next_unit() < 0.5;  // randomized treatment
        const bool y = f_y(model, x, u.z_bits, u.u_y);
        batch.pairs.push_back({x, y});
    }
    return batch;
}

SampleBatch draw_observational(const ScmModel& model, std::int64_t n, std::uint64_t seed) {
    validate(model);
    check_size(n, "observational sample count");
    SampleBatch batch{BatchKind::observational, {}, seed};
    batch.pairs.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        SplitMix64 stream(substream_seed(seed, static_cast<std::uint64_t>(i)));
        const ExogenousState u = draw_exogenous(model, stream);
        const bool x = f_x(model, u.z_bits, u.u_x);
        const bool y = f_y(model, x, u.z_bits, u.u_y);
        batch.pairs.push_back({x, y});
    }
    return batch;
}

EstimatedDistributions estimate(const SampleBatch& exp_batch, const SampleBatch& obs_batch) {
    if (exp_batch.kind != BatchKind::experimental) {
        throw validation_error("estimate: first batch must be experimental");
    }
    if (obs_batch.kind != BatchKind::observational) {
        throw validation_error("estimate: second batch must be observational");
    }
    auto tally = [](const SampleBatch& batch) {
        CountTable counts;
        for (const Sample& s : batch.pairs) {
            if (s.x) {
                (s.y ? counts.n11 : counts.n10) += 1;
            } else {
                (s.y ? counts.n01 : counts.n00) += 1;
            }
        }
        return counts;
    };
    return estimate_from_counts(tally(exp_batch), tally(obs_batch));
}

EstimatedDistributions estimate_from_counts(const CountTable& exp_counts,
                                            const CountTable& obs_counts) {
    for (std::int64_t c : {exp_counts.n11, exp_counts.n10, exp_counts.n01, exp_counts.n00,
                           obs_counts.n11, obs_counts.n10, obs_counts.n01, obs_counts.n00}) {
        if (c < 0) throw validation_error("counts must be nonnegative");
    }
    const std::int64_t treated = exp_counts.n11 + exp_counts.n10;
    const std::int64_t control = exp_counts.n01 + exp_counts.n00;
    if (treated == 0) {
        throw empty_arm_error("experimental arm x=1 has no samples; P(y_x) is not estimable");
    }
    if (control == 0) {
        throw empty_arm_error("experimental arm x=0 has no samples; P(y_x') is not estimable");
    }
    const std::int64_t n = obs_counts.total();
    if (n == 0) {
        throw validation_error("observational batch is empty");
    }

    EstimatedDistributions est;
    est.exp_hat.p_y_do_x = static_cast<double>(exp_counts.n11) / static_cast<double>(treated);
    est.exp_hat.p_y_do_xprime = static_cast<double>(exp_counts.n01) / static_cast<double>(control);
    est.obs_hat.p_xy = static_cast<double>(obs_counts.n11) / static_cast<double>(n);
    est.obs_hat.p_xy_prime = static_cast<double>(obs_counts.n10) / static_cast<double>(n);
    est.obs_hat.p_xprime_y = static_cast<double>(obs_counts.n01) / static_cast<double>(n);
    est.obs_hat.p_xprime_yprime = static_cast<double>(obs_counts.n00) / static_cast<double>(n);
    est.m = treated + control;
    est.n = n;
    est.n_treated = treated;
    return est;
}

void write_batch_csv(const SampleBatch& batch, std::ostream& out) {
    out << "x,y\n";
    for (const Sample& s : batch.pairs) {
        out << int(s.x) << ',' << int(s.y) << '\n';
    }
}

}  // namespace pnsbounds
