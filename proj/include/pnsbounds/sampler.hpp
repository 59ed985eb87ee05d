#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pnsbounds/distributions.hpp"
#include "pnsbounds/rng.hpp"
#include "pnsbounds/scm.hpp"

namespace pnsbounds {

enum class BatchKind { experimental, observational };

std::string to_string(BatchKind kind);

struct Sample {
    bool x;
    bool y;
};

/// A finite batch of (X, Y) pairs drawn from one model. In experimental
/// batches X was assigned by Bernoulli(0.5) randomization; in
/// observational batches X = f_X(M_X, U_X).
struct SampleBatch {
    BatchKind kind;
    std::vector<Sample> pairs;
    std::uint64_t seed = 0;
};

/// Frequentist estimates formed from one experimental and one
/// observational batch.
struct EstimatedDistributions {
    ExperimentalDist exp_hat;
    ObservationalDist obs_hat;
    std::int64_t m = 0;          // experimental sample count
    std::int64_t n = 0;          // observational sample count
    std::int64_t n_treated = 0;  // experimental pairs with x = 1
};

/// Raw (x, y) counts; cells are indexed (x=1,y=1), (x=1,y=0), (x=0,y=1),
/// (x=0,y=0).
struct CountTable {
    std::int64_t n11 = 0;
    std::int64_t n10 = 0;
    std::int64_t n01 = 0;
    std::int64_t n00 = 0;

    std::int64_t total() const { return n11 + n10 + n01 + n00; }
};

/// Sample the 22 exogenous bits from their Bernoulli parameters, in the
/// order U_{Z_1}..U_{Z_20}, U_X, U_Y (one next_unit per bit).
ExogenousState draw_exogenous(const ScmModel& model, SplitMix64& stream);

/// m experimental pairs: exogenous bits, then X ~ Bernoulli(0.5), then
/// Y = f_Y(X, M_Y, U_Y). Draw i uses the substream seeded with
/// substream_seed(seed, i). Deterministic given (model, m, seed).
SampleBatch draw_experimental(const ScmModel& model, std::int64_t m, std::uint64_t seed);

/// n observational pairs: exogenous bits, then X = f_X(M_X, U_X),
/// Y = f_Y(X, M_Y, U_Y). Same substream discipline.
SampleBatch draw_observational(const ScmModel& model, std::int64_t n, std::uint64_t seed);

/// Conditional frequencies within the treatment arms for the experimental
/// batch, joint cell frequencies for the observational batch. Throws
/// empty_arm_error if either experimental arm has no samples.
EstimatedDistributions estimate(const SampleBatch& exp_batch, const SampleBatch& obs_batch);

/// Same estimators applied to pre-tabulated counts.
EstimatedDistributions estimate_from_counts(const CountTable& exp_counts,
                                            const CountTable& obs_counts);

/// CSV with header "x,y", one row per sample.
void write_batch_csv(const SampleBatch& batch, std::ostream& out);

}  // namespace pnsbounds
