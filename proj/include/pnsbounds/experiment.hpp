#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pnsbounds/bounds.hpp"
#include "pnsbounds/ci.hpp"
#include "pnsbounds/oracle.hpp"

namespace pnsbounds {

/// One replication: estimated bounds from fresh finite samples compared
/// against the informer truth. failed replications (an empty experimental
/// treatment arm) carry NaN estimates and are excluded from aggregates.
struct ReplicationResult {
    std::int64_t rep = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    bool failed = false;
    double est_lower = 0.0;
    double est_upper = 0.0;
    double true_lower = 0.0;
    double true_upper = 0.0;
    double err_lower = 0.0;  // |est_lower - true_lower|
    double err_upper = 0.0;  // |est_upper - true_upper|
    bool consistent = false;
    bool contains_true_pns = false;
};

/// Aggregate over one (m, n) grid point. Means and fractions are computed
/// over successful replications by a plain fold in replication order;
/// they are NaN when every replication failed.
struct SizeAggregate {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t reps = 0;  // requested
    std::int64_t failed_reps = 0;
    double mean_err_lower = 0.0;
    double mean_err_upper = 0.0;
    double frac_contains = 0.0;
    double frac_consistent = 0.0;
};

struct ExperimentReport {
    std::string model_name;
    std::uint64_t master_seed = 0;
    std::vector<SizeAggregate> aggregates;
    std::vector<std::vector<ReplicationResult>> rows;  // parallel to aggregates
};

/// reps independent replications at fixed sizes. Replication i derives
/// its seed as substream_seed(master_seed, i); the experimental batch
/// uses substream 0 of that seed and the observational batch substream 1.
/// If truth is null the informer runs once internally. Replications are
/// computed in parallel; results are identical for any worker count.
std::vector<ReplicationResult> run_replications(const ScmModel& model, std::int64_t m,
                                                std::int64_t n, std::int64_t reps,
                                                std::uint64_t master_seed,
                                                const TrueDistributions* truth = nullptr,
                                                int threads = 0);

/// Fold rows (in replication order) into a SizeAggregate.
SizeAggregate aggregate(const std::vector<ReplicationResult>& rows);

/// run_replications at m = n = size for every grid size, with the same
/// master seed passed through, so a one-point sweep equals the plain
/// run_replications output.
ExperimentReport error_sweep(const ScmModel& model, const std::vector<std::int64_t>& size_grid,
                             std::int64_t reps, std::uint64_t master_seed, int threads = 0);

struct CoverageResult {
    std::int64_t reps = 0;
    std::int64_t covered = 0;
    double fraction = 0.0;
};

/// Wald-interval coverage of the single parameter P(y_x): each
/// replication samples n Bernoulli(P(y_x)) indicators by evaluating
/// f_Y(1, M_Y, U_Y) on fresh exogenous draws, forms the Wald interval
/// p_hat +/- z*sqrt(p_hat(1-p_hat)/n), and checks whether it covers the
/// informer value.
CoverageResult wald_coverage(const ScmModel& model, std::int64_t n, std::int64_t reps,
                             std::uint64_t master_seed, const ConfidenceSpec& conf,
                             int threads = 0);

/// Columns: rep,m,n,est_lower,est_upper,true_lower,true_upper,err_lower,
/// err_upper,consistent,contains_true_pns. Doubles are written with
/// "%.17g" so values round-trip exactly; failed replications carry nan
/// estimates and zero flags.
void write_replications_csv(const std::vector<ReplicationResult>& rows, std::ostream& out);

/// Columns: size,reps,mean_err_lower,mean_err_upper,frac_contains,
/// frac_consistent,failed_reps.
void write_sweep_csv(const ExperimentReport& report, std::ostream& out);

/// Parse a replications CSV back; used to re-verify aggregates.
std::vector<ReplicationResult> read_replications_csv(std::istream& in);

}  // namespace pnsbounds
