#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqtrial/analytic.hpp"
#include "seqtrial/montecarlo.hpp"
#include "seqtrial/table.hpp"

namespace py = pybind11;
using namespace seqtrial;

PYBIND11_MODULE(_seqtrial, m) {
    m.doc() = "Sample-average distribution after a two-stage sequential trial";

    py::class_<StoppingRule>(m, "StoppingRule")
        .def_static("probabilistic", &StoppingRule::probabilistic, py::arg("alpha") = 0.0, py::arg("beta"))
        .def_static("deterministic", &StoppingRule::deterministic)
        .def_property_readonly("is_deterministic", &StoppingRule::is_deterministic)
        .def_property_readonly("label", &StoppingRule::label)
        .def("__repr__", [](const StoppingRule& r) {
            if (r.is_deterministic()) return std::string("StoppingRule.deterministic()");
            return "StoppingRule.probabilistic(alpha=" + py::repr(py::float_(r.probit().alpha)).cast<std::string>() +
                   ", beta=" + py::repr(py::float_(r.probit().beta)).cast<std::string>() + ")";
        });

    py::class_<TrialParams>(m, "TrialParams")
        .def(py::init<double, std::int64_t>(), py::arg("mu"), py::arg("n"))
        .def_property_readonly("mu", &TrialParams::mu)
        .def_property_readonly("n", &TrialParams::n);

    m.def("stop_probability", &stop_probability, py::arg("rule"), py::arg("params"), py::arg("sample_sum"));
    m.def("marginal_stop_probability", &marginal_stop_probability, py::arg("rule"), py::arg("params"));
    m.def("expected_estimate", &expected_estimate, py::arg("rule"), py::arg("params"));

    m.def(
        "joint_density",
        [](const StoppingRule& rule, const TrialParams& params, bool second_stage, double k) {
            return analytic::joint_density(rule, params, second_stage ? Branch::stage_two : Branch::stage_one, k);
        },
        py::arg("rule"), py::arg("params"), py::arg("second_stage"), py::arg("k"));
    m.def(
        "statistic_density",
        [](const StoppingRule& rule, const TrialParams& params, double u) {
            return analytic::statistic_density({rule, params}, u);
        },
        py::arg("rule"), py::arg("params"), py::arg("u"));
    m.def(
        "statistic_cdf",
        [](const StoppingRule& rule, const TrialParams& params, double x, double tol) {
            return analytic::statistic_cdf({rule, params}, x, tol);
        },
        py::arg("rule"), py::arg("params"), py::arg("x"), py::arg("tol") = analytic::kDefaultCdfTolerance);
    m.def("tv_bound", &analytic::tv_bound, py::arg("rule"), py::arg("params"),
          py::arg("tol") = quadrature::kDefaultBoundTolerance);
    m.def(
        "exact_tv_distance",
        [](const StoppingRule& rule, const TrialParams& params) { return analytic::exact_tv_distance({rule, params}); },
        py::arg("rule"), py::arg("params"));
    m.def(
        "exact_kolmogorov",
        [](const StoppingRule& rule, const TrialParams& params) {
            return analytic::exact_kolmogorov({rule, params}).distance;
        },
        py::arg("rule"), py::arg("params"));
    m.def(
        "exact_coverage",
        [](const StoppingRule& rule, const TrialParams& params, double x) {
            return analytic::exact_coverage({rule, params}, x);
        },
        py::arg("rule"), py::arg("params"), py::arg("x") = 1.96);

    m.def(
        "simulate",
        [](const StoppingRule& rule, const TrialParams& params, std::size_t replicates, double x, std::uint64_t seed,
           unsigned threads) {
            montecarlo::SimulationPlan plan{rule, params, replicates, x, seed};
            montecarlo::EmpiricalSample sample;
            {
                py::gil_scoped_release release;
                sample = montecarlo::run_simulation(plan, threads);
            }
            const auto s = montecarlo::summarize(sample, plan);
            py::dict out;
            out["statistics"] = sample.statistics;
            out["stop_count"] = sample.stop_count;
            out["K"] = s.empirical_kolmogorov;
            out["L"] = s.coverage_count;
            out["coverage_rate"] = s.coverage_rate;
            out["bias"] = s.bias_estimate;
            out["flagged"] = s.flagged;
            return out;
        },
        py::arg("rule"), py::arg("params"), py::arg("replicates") = 1000, py::arg("x") = 1.96, py::arg("seed") = 0,
        py::arg("threads") = 0);

    m.def(
        "table",
        [](int table_id, std::uint64_t seed, std::size_t replicates) {
            std::vector<table::TableRow> rows;
            {
                py::gil_scoped_release release;
                rows = table::compute_table(table_id, seed, replicates);
            }
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["beta"] = r.beta_label;
                d["mu"] = r.mu;
                d["n"] = r.n;
                d["C"] = r.C;
                d["K"] = r.K;
                d["L"] = r.L;
                d["flagged"] = r.flagged;
                out.append(d);
            }
            return out;
        },
        py::arg("table_id"), py::arg("seed") = 0, py::arg("replicates") = 1000);
}
