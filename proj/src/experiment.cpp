#include "pnsbounds/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "parallel.hpp"
#include "pnsbounds/errors.hpp"
#include "pnsbounds/sampler.hpp"

namespace pnsbounds {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Tolerance for "interval contains the true PNS".
constexpr double kContainsSlack = 1e-12;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_positive(std::int64_t v, const char* what) {
    if (v < 1) {
        throw validation_error(std::string(what) + " must be >= 1, got " + std::to_string(v));
    }
}

int replication_chunks(std::int64_t reps) {
    return static_cast<int>(std::min<std::int64_t>(reps, 64));
}

}  // namespace

std::vector<ReplicationResult> run_replications(const ScmModel& model, std::int64_t m,
                                                std::int64_t n, std::int64_t reps,
                                                std::uint64_t master_seed,
                                                const TrueDistributions* truth, int threads) {
    check_positive(m, "m");
    check_positive(n, "n");
    check_positive(reps, "reps");
    validate(model);  // workers must not throw

    TrueDistributions local_truth;
    if (truth == nullptr) {
        local_truth = informer(model, threads);
        truth = &local_truth;
    }
    const PnsBounds true_bounds = pns_bounds(truth->exp, truth->obs);
    const double true_pns = truth->true_pns;

    std::vector<ReplicationResult> rows(static_cast<std::size_t>(reps));
    const int chunks = replication_chunks(reps);
    detail::for_each_chunk(chunks, threads, [&](int chunk) {
        const std::int64_t lo = reps * chunk / chunks;
        const std::int64_t hi = reps * (chunk + 1) / chunks;
        for (std::int64_t i = lo; i < hi; ++i) {
            const std::uint64_t rep_seed = substream_seed(master_seed, static_cast<std::uint64_t>(i));
            ReplicationResult r;
            r.rep = i;
            r.m = m;
            r.n = n;
            r.true_lower = true_bounds.lower;
            r.true_upper = true_bounds.upper;
            const SampleBatch exp_b = draw_experimental(model, m, substream_seed(rep_seed, 0));
            const SampleBatch obs_b = draw_observational(model, n, substream_seed(rep_seed, 1));
            try {
                const EstimatedDistributions est = estimate(exp_b, obs_b);
                const PnsBounds eb = pns_bounds(est.exp_hat, est.obs_hat);
                r.est_lower = eb.lower;
                r.est_upper = eb.upper;
                r.err_lower = std::abs(eb.lower - true_bounds.lower);
                r.err_upper = std::abs(eb.upper - true_bounds.upper);
                r.consistent = eb.consistent;
                r.contains_true_pns = true_pns >= eb.lower - kContainsSlack &&
                                      true_pns <= eb.upper + kContainsSlack;
            } catch (const empty_arm_error&) {
                r.failed = true;
                r.est_lower = r.est_upper = kNan;
                r.err_lower = r.err_upper = kNan;
            }
            rows[static_cast<std::size_t>(i)] = r;
        }
    });
    return rows;
}

SizeAggregate aggregate(const std::vector<ReplicationResult>& rows) {
    SizeAggregate agg;
    std::int64_t ok = 0;
    std::int64_t contains = 0;
    std::int64_t consistent = 0;
    double sum_lower = 0.0;
    double sum_upper = 0.0;
    for (const ReplicationResult& r : rows) {
        agg.m = r.m;
        agg.n = r.n;
        if (r.failed) {
            ++agg.failed_reps;
            continue;
        }
        ++ok;
        sum_lower += r.err_lower;
        sum_upper += r.err_upper;
        contains += r.contains_true_pns ? 1 : 0;
        consistent += r.consistent ? 1 : 0;
    }
    agg.reps = static_cast<std::int64_t>(rows.size());
    agg.mean_err_lower = sum_lower / static_cast<double>(ok);
    agg.mean_err_upper = sum_upper / static_cast<double>(ok);
    agg.frac_contains = static_cast<double>(contains) / static_cast<double>(ok);
    agg.frac_consistent = static_cast<double>(consistent) / static_cast<double>(ok);
    return agg;
}

ExperimentReport error_sweep(const ScmModel& model, const std::vector<std::int64_t>& size_grid,
                             std::int64_t reps, std::uint64_t master_seed, int threads) {
    if (size_grid.empty()) {
        throw validation_error("size grid must not be empty");
    }
    const TrueDistributions truth = informer(model, threads);

    ExperimentReport report;
    report.model_name = model.name;
    report.master_seed = master_seed;
    for (std::int64_t size : size_grid) {
        auto rows = run_replications(model, size, size, reps, master_seed, &truth, threads);
        report.aggregates.push_back(aggregate(rows));
        report.rows.push_back(std::move(rows));
    }
    return report;
}

CoverageResult wald_coverage(const ScmModel& model, std::int64_t n, std::int64_t reps,
                             std::uint64_t master_seed, const ConfidenceSpec& conf, int threads) {
    check_positive(n, "n");
    check_positive(reps, "reps");
    InformerRequest request;
    request.obs = false;
    request.true_pns = false;
    const double p_true = informer_sparse(model, request, threads).exp.p_y_do_x;

    std::vector<char> covered(static_cast<std::size_t>(reps), 0);
    const int chunks = replication_chunks(reps);
    detail::for_each_chunk(chunks, threads, [&](int chunk) {
        const std::int64_t lo = reps * chunk / chunks;
        const std::int64_t hi = reps * (chunk + 1) / chunks;
        for (std::int64_t rep = lo; rep < hi; ++rep) {
            const std::uint64_t rep_seed = substream_seed(master_seed, static_cast<std::uint64_t>(rep));
            std::int64_t successes = 0;
            for (std::int64_t i = 0; i < n; ++i) {
                SplitMix64 stream(substream_seed(rep_seed, static_cast<std::uint64_t>(i)));
                const ExogenousState u = draw_exogenous(model, stream);
                // R = 1 iff the event y_x occurs for this individual.
                if (f_y(model, true, u.z_bits, u.u_y)) ++successes;
            }
            const double p_hat = static_cast<double>(successes) / static_cast<double>(n);
            const double margin = wald_margin(p_hat, n, conf);
            covered[static_cast<std::size_t>(rep)] = std::abs(p_hat - p_true) <= margin ? 1 : 0;
        }
    });

    CoverageResult result;
    result.reps = reps;
    for (char c : covered) result.covered += c;
    result.fraction = static_cast<double>(result.covered) / static_cast<double>(reps);
    return result;
}

void write_replications_csv(const std::vector<ReplicationResult>& rows, std::ostream& out) {
    out << "rep,m,n,est_lower,est_upper,true_lower,true_upper,err_lower,err_upper,"
           "consistent,contains_true_pns\n";
    for (const ReplicationResult& r : rows) {
        out << r.rep << ',' << r.m << ',' << r.n << ',' << fmt(r.est_lower) << ','
            << fmt(r.est_upper) << ',' << fmt(r.true_lower) << ',' << fmt(r.true_upper) << ','
            << fmt(r.err_lower) << ',' << fmt(r.err_upper) << ',' << int(r.consistent) << ','
            << int(r.contains_true_pns) << '\n';
    }
}

void write_sweep_csv(const ExperimentReport& report, std::ostream& out) {
    out << "size,reps,mean_err_lower,mean_err_upper,frac_contains,frac_consistent,failed_reps\n";
    for (const SizeAggregate& agg : report.aggregates) {
        out << agg.m << ',' << agg.reps << ',' << fmt(agg.mean_err_lower) << ','
            << fmt(agg.mean_err_upper) << ',' << fmt(agg.frac_contains) << ','
            << fmt(agg.frac_consistent) << ',' << agg.failed_reps << '\n';
    }
}

std::vector<ReplicationResult> read_replications_csv(std::istream& in) {
    std::vector<ReplicationResult> rows;
    std::string line;
    if (!std::getline(in, line)) {
        throw validation_error("replications CSV is empty");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 11) {
            throw validation_error("replications CSV row has " + std::to_string(fields.size()) +
                                   " fields, expected 11");
        }
        ReplicationResult r;
        r.rep = std::strtoll(fields[0].c_str(), nullptr, 10);
        r.m = std::strtoll(fields[1].c_str(), nullptr, 10);
        r.n = std::strtoll(fields[2].c_str(), nullptr, 10);
        r.est_lower = std::strtod(fields[3].c_str(), nullptr);
        r.est_upper = std::strtod(fields[4].c_str(), nullptr);
        r.true_lower = std::strtod(fields[5].c_str(), nullptr);
        r.true_upper = std::strtod(fields[6].c_str(), nullptr);
        r.err_lower = std::strtod(fields[7].c_str(), nullptr);
        r.err_upper = std::strtod(fields[8].c_str(), nullptr);
        r.consistent = fields[9] == "1";
        r.contains_true_pns = fields[10] == "1";
        r.failed = std::isnan(r.est_lower);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace pnsbounds
