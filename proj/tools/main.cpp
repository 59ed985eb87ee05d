// pnsbounds command-line tool: plan sample sizes, compute PNS bounds with
// confidence margins from summary data, generate and evaluate structural
// models, and run replication studies.
//
// Exit codes: 0 success, 2 usage/domain error, 3 estimation-precondition
// failure (an empty experimental treatment arm).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pnsbounds/bounds.hpp"
#include "pnsbounds/ci.hpp"
#include "pnsbounds/errors.hpp"
#include "pnsbounds/experiment.hpp"
#include "pnsbounds/oracle.hpp"
#include "pnsbounds/planner.hpp"
#include "pnsbounds/sampler.hpp"
#include "pnsbounds/scm.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pnsbounds;

ScmModel resolve_model(const std::string& name_or_path) {
    if (name_or_path == "model1") return preset(Preset::model1);
    if (name_or_path == "model2") return preset(Preset::model2);
    return load_model_file(name_or_path);
}

ordered_json exp_to_json(const ExperimentalDist& exp) {
    return {{"p_y_do_x", exp.p_y_do_x}, {"p_y_do_xprime", exp.p_y_do_xprime}};
}

ordered_json obs_to_json(const ObservationalDist& obs) {
    return {{"p_xy", obs.p_xy},
            {"p_xy_prime", obs.p_xy_prime},
            {"p_xprime_y", obs.p_xprime_y},
            {"p_xprime_yprime", obs.p_xprime_yprime}};
}

ordered_json bounds_to_json(const PnsBounds& b) {
    return {{"lower", b.lower},
            {"upper", b.upper},
            {"consistent", b.consistent},
            {"lower_arms", b.lower_arms},
            {"upper_arms", b.upper_arms}};
}

ordered_json margins_to_json(const MarginReport& r, const ConfidenceSpec& conf) {
    return {{"alpha", conf.alpha},
            {"z", conf.z},
            {"per_arm_lower", r.per_arm_margins_lower},
            {"per_arm_upper", r.per_arm_margins_upper},
            {"worst_case", r.worst_case_margin},
            {"m", r.m},
            {"n", r.n}};
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

struct PlanOptions {
    double alpha = 0.05;
    double epsilon = 0.05;
    int k_term = 0;  // 0 = full bounds
    bool z_rounded = false;
};

int cmd_plan(const PlanOptions& opt) {
    const ConfidenceSpec conf = opt.z_rounded ? ConfidenceSpec::with_fixed_z(opt.alpha, 1.96)
                                              : ConfidenceSpec::from_alpha(opt.alpha);
    const SamplePlan plan = opt.k_term > 0 ? plan_k_term(opt.k_term, opt.alpha, opt.epsilon, conf)
                                           : plan_equal(opt.alpha, opt.epsilon, conf);
    ordered_json doc{{"kind", to_string(plan.kind)},
                     {"alpha", plan.alpha},
                     {"epsilon", plan.epsilon},
                     {"z", conf.z},
                     {"m", plan.m},
                     {"n", plan.n},
                     {"achieved_margin", plan.achieved_margin}};
    if (plan.kind != PlanKind::full_bounds) {
        doc["k"] = plan.k;
    } else {
        doc["constraint_threshold"] = plan_constraint(opt.alpha, opt.epsilon, conf).threshold;
    }
    emit(doc);
    return 0;
}

struct BoundsOptions {
    std::vector<double> exp_probs;     // P(y_x), P(y_{x'})
    std::vector<double> obs_probs;     // P(x,y), P(x,y'), P(x',y), P(x',y')
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::vector<std::int64_t> exp_counts;  // (1,1) (1,0) (0,1) (0,0)
    std::vector<std::int64_t> obs_counts;
    double alpha = 0.05;
};

int cmd_bounds(const BoundsOptions& opt) {
    const bool prob_mode = !opt.exp_probs.empty() || !opt.obs_probs.empty();
    const bool count_mode = !opt.exp_counts.empty() || !opt.obs_counts.empty();
    if (prob_mode == count_mode) {
        throw validation_error(
            "supply either probabilities (--exp/--obs with --m/--n) or counts "
            "(--exp-counts/--obs-counts)");
    }

    EstimatedDistributions est;
    if (prob_mode) {
        if (opt.exp_probs.size() != 2 || opt.obs_probs.size() != 4) {
            throw validation_error("--exp takes 2 probabilities and --obs takes 4");
        }
        if (opt.m < 1 || opt.n < 1) {
            throw validation_error("probability mode requires positive --m and --n");
        }
        est.exp_hat = {opt.exp_probs[0], opt.exp_probs[1]};
        est.obs_hat = {opt.obs_probs[0], opt.obs_probs[1], opt.obs_probs[2], opt.obs_probs[3]};
        est.m = opt.m;
        est.n = opt.n;
    } else {
        if (opt.exp_counts.size() != 4 || opt.obs_counts.size() != 4) {
            throw validation_error("--exp-counts and --obs-counts each take 4 values");
        }
        const CountTable ec{opt.exp_counts[0], opt.exp_counts[1], opt.exp_counts[2],
                            opt.exp_counts[3]};
        const CountTable oc{opt.obs_counts[0], opt.obs_counts[1], opt.obs_counts[2],
                            opt.obs_counts[3]};
        est = estimate_from_counts(ec, oc);
    }

    const ConfidenceSpec conf = ConfidenceSpec::from_alpha(opt.alpha);
    const PnsBounds b = pns_bounds(est.exp_hat, est.obs_hat);
    const MarginReport margins = arm_margins(est.exp_hat, est.obs_hat, est.m, est.n, conf);
    ordered_json doc{{"input", {{"exp", exp_to_json(est.exp_hat)},
                                {"obs", obs_to_json(est.obs_hat)},
                                {"m", est.m},
                                {"n", est.n}}},
                     {"bounds", bounds_to_json(b)},
                     {"margins", margins_to_json(margins, conf)}};
    emit(doc);
    return 0;
}

struct OracleOptions {
    std::string model;
    std::string restrict_to;  // comma list of exp,obs,pns
    int threads = 0;
};

int cmd_oracle(const OracleOptions& opt) {
    const ScmModel model = resolve_model(opt.model);
    InformerRequest request;
    if (!opt.restrict_to.empty()) {
        request = {false, false, false};
        std::stringstream ss(opt.restrict_to);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (token == "exp") request.exp = true;
            else if (token == "obs") request.obs = true;
            else if (token == "pns") request.true_pns = true;
            else throw validation_error("unknown --restrict field: " + token +
                                        " (expected exp, obs, pns)");
        }
    }
    const TrueDistributions truth = informer_sparse(model, request, opt.threads);
    ordered_json doc{{"model", model.name}};
    if (request.exp) doc["exp"] = exp_to_json(truth.exp);
    if (request.obs) doc["obs"] = obs_to_json(truth.obs);
    if (request.true_pns) doc["true_pns"] = truth.true_pns;
    if (request.exp && request.obs) {
        const PnsBounds b = pns_bounds(truth.exp, truth.obs);
        doc["bounds"] = {{"lower", b.lower}, {"upper", b.upper}};
    }
    emit(doc);
    return 0;
}

struct GenModelOptions {
    std::uint64_t seed = 0;
    std::string out;
    std::string name;
};

int cmd_gen_model(const GenModelOptions& opt) {
    ScmModel model = generate_model(opt.seed);
    if (!opt.name.empty()) model.name = opt.name;
    if (opt.out == "-") {
        save_model(model, std::cout);
    } else {
        save_model_file(model, opt.out);
    }
    return 0;
}

struct SampleOptions {
    std::string model;
    std::string kind;
    std::int64_t size = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_sample(const SampleOptions& opt) {
    const ScmModel model = resolve_model(opt.model);
    SampleBatch batch;
    if (opt.kind == "experimental") {
        batch = draw_experimental(model, opt.size, opt.seed);
    } else if (opt.kind == "observational") {
        batch = draw_observational(model, opt.size, opt.seed);
    } else {
        throw validation_error("--kind must be experimental or observational, got " + opt.kind);
    }

    std::ofstream out(opt.out);
    if (!out) throw validation_error("cannot open output file: " + opt.out);
    write_batch_csv(batch, out);

    const ordered_json meta{{"kind", to_string(batch.kind)},
                            {"seed", batch.seed},
                            {"size", static_cast<std::int64_t>(batch.pairs.size())}};
    std::ofstream meta_out(opt.out + ".meta.json");
    if (!meta_out) throw validation_error("cannot open sidecar file: " + opt.out + ".meta.json");
    meta_out << meta.dump(2) << "\n";
    return 0;
}

struct SimulateOptions {
    std::string model;
    std::vector<std::int64_t> grid;
    std::int64_t reps = 0;
    std::uint64_t seed = 0;
    std::string out_dir;
    int threads = 0;
};

int cmd_simulate(const SimulateOptions& opt) {
    const ScmModel model = resolve_model(opt.model);
    const ExperimentReport report = error_sweep(model, opt.grid, opt.reps, opt.seed, opt.threads);

    std::filesystem::create_directories(opt.out_dir);
    ordered_json files = ordered_json::array();
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const std::string path =
            opt.out_dir + "/replications_" + std::to_string(opt.grid[i]) + ".csv";
        std::ofstream out(path);
        if (!out) throw validation_error("cannot open output file: " + path);
        write_replications_csv(report.rows[i], out);
        files.push_back(path);
    }
    const std::string sweep_path = opt.out_dir + "/sweep.csv";
    std::ofstream sweep_out(sweep_path);
    if (!sweep_out) throw validation_error("cannot open output file: " + sweep_path);
    write_sweep_csv(report, sweep_out);

    emit(ordered_json{{"model", model.name},
                      {"sizes", opt.grid},
                      {"reps", opt.reps},
                      {"seed", opt.seed},
                      {"sweep_csv", sweep_path},
                      {"replication_csvs", files}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tight PNS bounds, confidence margins, and sample-size planning"};
    app.require_subcommand(1);

    PlanOptions plan_opt;
    auto* plan = app.add_subcommand("plan", "Minimal sample sizes for a target margin of error");
    plan->add_option("--alpha", plan_opt.alpha, "Significance level")->required();
    plan->add_option("--epsilon", plan_opt.epsilon, "Target margin of error")->required();
    plan->add_option("--k-term", plan_opt.k_term,
                     "Plan for an expression of k worst-case terms instead of the full bounds");
    plan->add_flag("--z-rounded", plan_opt.z_rounded, "Use the z-table value 1.96");

    BoundsOptions bounds_opt;
    auto* bounds = app.add_subcommand("bounds", "PNS bounds and margins from summary data");
    bounds->add_option("--exp", bounds_opt.exp_probs, "P(y_x) P(y_x') probabilities")
        ->expected(2);
    bounds->add_option("--obs", bounds_opt.obs_probs,
                       "P(x,y) P(x,y') P(x',y) P(x',y') probabilities")
        ->expected(4);
    bounds->add_option("--m", bounds_opt.m, "Experimental sample count (probability mode)");
    bounds->add_option("--n", bounds_opt.n, "Observational sample count (probability mode)");
    bounds->add_option("--exp-counts", bounds_opt.exp_counts,
                       "Experimental counts for (x,y) = (1,1) (1,0) (0,1) (0,0)")
        ->expected(4);
    bounds->add_option("--obs-counts", bounds_opt.obs_counts,
                       "Observational counts for (x,y) = (1,1) (1,0) (0,1) (0,0)")
        ->expected(4);
    bounds->add_option("--alpha", bounds_opt.alpha, "Significance level")
        ->capture_default_str();

    OracleOptions oracle_opt;
    auto* oracle = app.add_subcommand("oracle", "Exact distributions and true PNS of a model");
    oracle->add_option("--model", oracle_opt.model, "Model JSON file, or model1/model2")
        ->required();
    oracle->add_option("--restrict", oracle_opt.restrict_to,
                       "Comma list of outputs: exp, obs, pns (default all)");
    oracle->add_option("--threads", oracle_opt.threads, "Worker cap (0 = hardware)");

    GenModelOptions gen_opt;
    auto* gen = app.add_subcommand("gen-model", "Generate a random model");
    gen->add_option("--seed", gen_opt.seed, "RNG seed")->required();
    gen->add_option("--out", gen_opt.out, "Output path, or - for stdout")->required();
    gen->add_option("--name", gen_opt.name, "Model name (default seed-<seed>)");

    SampleOptions sample_opt;
    auto* sample = app.add_subcommand("sample", "Draw a finite sample batch as CSV");
    sample->add_option("--model", sample_opt.model, "Model JSON file, or model1/model2")
        ->required();
    sample->add_option("--kind", sample_opt.kind, "experimental or observational")->required();
    sample->add_option("--size", sample_opt.size, "Number of samples")->required();
    sample->add_option("--seed", sample_opt.seed, "RNG seed")->required();
    sample->add_option("--out", sample_opt.out, "Output CSV path")->required();

    SimulateOptions sim_opt;
    auto* simulate = app.add_subcommand("simulate", "Replication study across sample sizes");
    simulate->add_option("--model", sim_opt.model, "Model JSON file, or model1/model2")
        ->required();
    simulate->add_option("--grid", sim_opt.grid, "Comma-separated sample sizes")
        ->required()
        ->delimiter(',');
    simulate->add_option("--reps", sim_opt.reps, "Replications per size")->required();
    simulate->add_option("--seed", sim_opt.seed, "Master seed")->required();
    simulate->add_option("--out-dir", sim_opt.out_dir, "Directory for CSV reports")->required();
    simulate->add_option("--threads", sim_opt.threads, "Worker cap (0 = hardware)");

    try {
        app.parse(argc, argv);
        if (plan->parsed()) return cmd_plan(plan_opt);
        if (bounds->parsed()) return cmd_bounds(bounds_opt);
        if (oracle->parsed()) return cmd_oracle(oracle_opt);
        if (gen->parsed()) return cmd_gen_model(gen_opt);
        if (sample->parsed()) return cmd_sample(sample_opt);
        if (simulate->parsed()) return cmd_simulate(sim_opt);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const empty_arm_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
