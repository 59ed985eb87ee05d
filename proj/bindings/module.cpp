#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pnsbounds/bounds.hpp"
#include "pnsbounds/ci.hpp"
#include "pnsbounds/experiment.hpp"
#include "pnsbounds/normal.hpp"
#include "pnsbounds/oracle.hpp"
#include "pnsbounds/planner.hpp"
#include "pnsbounds/sampler.hpp"
#include "pnsbounds/scm.hpp"

namespace py = pybind11;
using namespace pnsbounds;

PYBIND11_MODULE(pnsbounds, m) {
    m.doc() = "Tight PNS bounds, confidence-interval margins, sample-size planning, "
              "and structural-model simulation";

    // ---- distributions & bounds -------------------------------------
    py::class_<ExperimentalDist>(m, "ExperimentalDist")
        .def(py::init<double, double>(), py::arg("p_y_do_x"), py::arg("p_y_do_xprime"))
        .def_readwrite("p_y_do_x", &ExperimentalDist::p_y_do_x)
        .def_readwrite("p_y_do_xprime", &ExperimentalDist::p_y_do_xprime)
        .def("p_yprime_do_xprime", &ExperimentalDist::p_yprime_do_xprime);

    py::class_<ObservationalDist>(m, "ObservationalDist")
        .def(py::init<double, double, double, double>(), py::arg("p_xy"), py::arg("p_xy_prime"),
             py::arg("p_xprime_y"), py::arg("p_xprime_yprime"))
        .def_readwrite("p_xy", &ObservationalDist::p_xy)
        .def_readwrite("p_xy_prime", &ObservationalDist::p_xy_prime)
        .def_readwrite("p_xprime_y", &ObservationalDist::p_xprime_y)
        .def_readwrite("p_xprime_yprime", &ObservationalDist::p_xprime_yprime)
        .def("p_y", &ObservationalDist::p_y);

    py::class_<PnsBounds>(m, "PnsBounds")
        .def_readonly("lower", &PnsBounds::lower)
        .def_readonly("upper", &PnsBounds::upper)
        .def_readonly("lower_arms", &PnsBounds::lower_arms)
        .def_readonly("upper_arms", &PnsBounds::upper_arms)
        .def_readonly("consistent", &PnsBounds::consistent);

    m.def("pns_bounds", &pns_bounds, py::arg("exp"), py::arg("obs"),
          "Tight bounds on PNS from experimental and observational distributions");

    // ---- confidence margins -----------------------------------------
    py::class_<ConfidenceSpec>(m, "ConfidenceSpec")
        .def_static("from_alpha", &ConfidenceSpec::from_alpha, py::arg("alpha"))
        .def_static("with_fixed_z", &ConfidenceSpec::with_fixed_z, py::arg("alpha"), py::arg("z"))
        .def_readonly("alpha", &ConfidenceSpec::alpha)
        .def_readonly("z", &ConfidenceSpec::z);

    py::class_<MarginReport>(m, "MarginReport")
        .def_readonly("per_arm_margins_lower", &MarginReport::per_arm_margins_lower)
        .def_readonly("per_arm_margins_upper", &MarginReport::per_arm_margins_upper)
        .def_readonly("worst_case_margin", &MarginReport::worst_case_margin)
        .def_readonly("m", &MarginReport::m)
        .def_readonly("n", &MarginReport::n);

    m.def("normal_cdf", &normal_cdf, py::arg("x"));
    m.def("inverse_normal_cdf", &inverse_normal_cdf, py::arg("q"));
    m.def("wald_margin", &wald_margin, py::arg("p_hat"), py::arg("count"), py::arg("conf"));
    m.def("worst_case_term_margin", &worst_case_term_margin, py::arg("count"), py::arg("conf"));
    m.def("theorem_margin", &theorem_margin, py::arg("m"), py::arg("n"), py::arg("conf"));
    m.def("arm_margins", &arm_margins, py::arg("exp_hat"), py::arg("obs_hat"), py::arg("m"),
          py::arg("n"), py::arg("conf"));

    // ---- planner ------------------------------------------------------
    py::enum_<PlanKind>(m, "PlanKind")
        .value("full_bounds", PlanKind::full_bounds)
        .value("k_term", PlanKind::k_term)
        .value("single_term", PlanKind::single_term);

    py::class_<SamplePlan>(m, "SamplePlan")
        .def_readonly("m", &SamplePlan::m)
        .def_readonly("n", &SamplePlan::n)
        .def_readonly("alpha", &SamplePlan::alpha)
        .def_readonly("epsilon", &SamplePlan::epsilon)
        .def_readonly("kind", &SamplePlan::kind)
        .def_readonly("k", &SamplePlan::k)
        .def_readonly("achieved_margin", &SamplePlan::achieved_margin);

    py::class_<PlanConstraint>(m, "PlanConstraint")
        .def_readonly("alpha", &PlanConstraint::alpha)
        .def_readonly("epsilon", &PlanConstraint::epsilon)
        .def_readonly("z", &PlanConstraint::z)
        .def_readonly("threshold", &PlanConstraint::threshold)
        .def("min_n_given_m", &PlanConstraint::min_n_given_m, py::arg("m"));

    m.def("plan_equal", py::overload_cast<double, double>(&plan_equal), py::arg("alpha"),
          py::arg("epsilon"));
    m.def("plan_equal", py::overload_cast<double, double, const ConfidenceSpec&>(&plan_equal),
          py::arg("alpha"), py::arg("epsilon"), py::arg("conf"));
    m.def("plan_constraint", py::overload_cast<double, double>(&plan_constraint), py::arg("alpha"),
          py::arg("epsilon"));
    m.def("plan_constraint",
          py::overload_cast<double, double, const ConfidenceSpec&>(&plan_constraint),
          py::arg("alpha"), py::arg("epsilon"), py::arg("conf"));
    m.def("plan_k_term", py::overload_cast<int, double, double>(&plan_k_term), py::arg("k"),
          py::arg("alpha"), py::arg("epsilon"));
    m.def("plan_k_term", py::overload_cast<int, double, double, const ConfidenceSpec&>(&plan_k_term),
          py::arg("k"), py::arg("alpha"), py::arg("epsilon"), py::arg("conf"));
    m.def("k_term_margin", &k_term_margin, py::arg("k"), py::arg("count"), py::arg("conf"));

    // ---- structural models ---------------------------------------------
    py::class_<ScmModel>(m, "ScmModel")
        .def(py::init<>())
        .def_readwrite("a", &ScmModel::a)
        .def_readwrite("b", &ScmModel::b)
        .def_readwrite("c", &ScmModel::c)
        .def_readwrite("theta_x", &ScmModel::theta_x)
        .def_readwrite("theta_y", &ScmModel::theta_y)
        .def_readwrite("theta_z", &ScmModel::theta_z)
        .def_readwrite("name", &ScmModel::name);

    py::enum_<Preset>(m, "Preset")
        .value("model1", Preset::model1)
        .value("model2", Preset::model2);

    m.def("preset", &preset, py::arg("which"), py::return_value_policy::copy);
    m.def("generate_model", &generate_model, py::arg("seed"));
    m.def("m_x", &m_x, py::arg("model"), py::arg("z_bits"));
    m.def("m_y", &m_y, py::arg("model"), py::arg("z_bits"));
    m.def("f_x", &f_x, py::arg("model"), py::arg("z_bits"), py::arg("u_x"));
    m.def("f_y", &f_y, py::arg("model"), py::arg("x"), py::arg("z_bits"), py::arg("u_y"));
    m.def("load_model_file", &load_model_file, py::arg("path"));
    m.def("save_model_file", &save_model_file, py::arg("model"), py::arg("path"));
    m.def(
        "model_to_json",
        [](const ScmModel& model) {
            std::ostringstream out;
            save_model(model, out);
            return out.str();
        },
        py::arg("model"));

    // ---- oracle ---------------------------------------------------------
    py::class_<TrueDistributions>(m, "TrueDistributions")
        .def_readonly("exp", &TrueDistributions::exp)
        .def_readonly("obs", &TrueDistributions::obs)
        .def_readonly("true_pns", &TrueDistributions::true_pns);

    py::class_<InformerRequest>(m, "InformerRequest")
        .def(py::init<>())
        .def_readwrite("exp", &InformerRequest::exp)
        .def_readwrite("obs", &InformerRequest::obs)
        .def_readwrite("true_pns", &InformerRequest::true_pns);

    m.def("informer", &informer, py::arg("model"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>(),
          "Exact distributions by exhaustive enumeration of all 2^22 exogenous states");
    m.def("informer_sparse", &informer_sparse, py::arg("model"), py::arg("request"),
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());

    // ---- sampling ---------------------------------------------------------
    py::enum_<BatchKind>(m, "BatchKind")
        .value("experimental", BatchKind::experimental)
        .value("observational", BatchKind::observational);

    py::class_<Sample>(m, "Sample")
        .def_readonly("x", &Sample::x)
        .def_readonly("y", &Sample::y);

    py::class_<SampleBatch>(m, "SampleBatch")
        .def_readonly("kind", &SampleBatch::kind)
        .def_readonly("pairs", &SampleBatch::pairs)
        .def_readonly("seed", &SampleBatch::seed);

    py::class_<EstimatedDistributions>(m, "EstimatedDistributions")
        .def_readonly("exp_hat", &EstimatedDistributions::exp_hat)
        .def_readonly("obs_hat", &EstimatedDistributions::obs_hat)
        .def_readonly("m", &EstimatedDistributions::m)
        .def_readonly("n", &EstimatedDistributions::n)
        .def_readonly("n_treated", &EstimatedDistributions::n_treated);

    py::class_<CountTable>(m, "CountTable")
        .def(py::init<std::int64_t, std::int64_t, std::int64_t, std::int64_t>(), py::arg("n11"),
             py::arg("n10"), py::arg("n01"), py::arg("n00"))
        .def_readwrite("n11", &CountTable::n11)
        .def_readwrite("n10", &CountTable::n10)
        .def_readwrite("n01", &CountTable::n01)
        .def_readwrite("n00", &CountTable::n00);

    m.def("draw_experimental", &draw_experimental, py::arg("model"), py::arg("m"), py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());
    m.def("draw_observational", &draw_observational, py::arg("model"), py::arg("n"),
          py::arg("seed"), py::call_guard<py::gil_scoped_release>());
    m.def("estimate", &estimate, py::arg("exp_batch"), py::arg("obs_batch"));
    m.def("estimate_from_counts", &estimate_from_counts, py::arg("exp_counts"),
          py::arg("obs_counts"));

    // ---- replication studies ------------------------------------------
    py::class_<ReplicationResult>(m, "ReplicationResult")
        .def_readonly("rep", &ReplicationResult::rep)
        .def_readonly("m", &ReplicationResult::m)
        .def_readonly("n", &ReplicationResult::n)
        .def_readonly("failed", &ReplicationResult::failed)
        .def_readonly("est_lower", &ReplicationResult::est_lower)
        .def_readonly("est_upper", &ReplicationResult::est_upper)
        .def_readonly("true_lower", &ReplicationResult::true_lower)
        .def_readonly("true_upper", &ReplicationResult::true_upper)
        .def_readonly("err_lower", &ReplicationResult::err_lower)
        .def_readonly("err_upper", &ReplicationResult::err_upper)
        .def_readonly("consistent", &ReplicationResult::consistent)
        .def_readonly("contains_true_pns", &ReplicationResult::contains_true_pns);

    py::class_<SizeAggregate>(m, "SizeAggregate")
        .def_readonly("m", &SizeAggregate::m)
        .def_readonly("n", &SizeAggregate::n)
        .def_readonly("reps", &SizeAggregate::reps)
        .def_readonly("failed_reps", &SizeAggregate::failed_reps)
        .def_readonly("mean_err_lower", &SizeAggregate::mean_err_lower)
        .def_readonly("mean_err_upper", &SizeAggregate::mean_err_upper)
        .def_readonly("frac_contains", &SizeAggregate::frac_contains)
        .def_readonly("frac_consistent", &SizeAggregate::frac_consistent);

    py::class_<ExperimentReport>(m, "ExperimentReport")
        .def_readonly("model_name", &ExperimentReport::model_name)
        .def_readonly("master_seed", &ExperimentReport::master_seed)
        .def_readonly("aggregates", &ExperimentReport::aggregates)
        .def_readonly("rows", &ExperimentReport::rows);

    py::class_<CoverageResult>(m, "CoverageResult")
        .def_readonly("reps", &CoverageResult::reps)
        .def_readonly("covered", &CoverageResult::covered)
        .def_readonly("fraction", &CoverageResult::fraction);

    m.def(
        "run_replications",
        [](const ScmModel& model, std::int64_t m_count, std::int64_t n_count, std::int64_t reps,
           std::uint64_t master_seed, int threads) {
            return run_replications(model, m_count, n_count, reps, master_seed, nullptr, threads);
        },
        py::arg("model"), py::arg("m"), py::arg("n"), py::arg("reps"), py::arg("master_seed"),
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("aggregate", &aggregate, py::arg("rows"));
    m.def("error_sweep", &error_sweep, py::arg("model"), py::arg("size_grid"), py::arg("reps"),
          py::arg("master_seed"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("wald_coverage", &wald_coverage, py::arg("model"), py::arg("n"), py::arg("reps"),
          py::arg("master_seed"), py::arg("conf"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
}
