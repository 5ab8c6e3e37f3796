#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "rkq/analysis.hpp"
#include "rkq/engine.hpp"
#include "rkq/figures.hpp"
#include "rkq/output.hpp"
#include "rkq/problem.hpp"
#include "rkq/tableau.hpp"
#include "rkq/tracker.hpp"

namespace py = pybind11;
using namespace rkq;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Adaptive Runge-Kutta integration with stepwise global-error "
              "control and high-order quenching";

    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    py::class_<ButcherTableau>(m, "ButcherTableau")
        .def(py::init<std::string, int, std::vector<std::vector<double>>,
                      std::vector<double>, std::vector<double>>(),
             py::arg("name"), py::arg("declared_order"), py::arg("a"), py::arg("b"),
             py::arg("c"))
        .def_readonly("name", &ButcherTableau::name)
        .def_readonly("declared_order", &ButcherTableau::declared_order)
        .def_readonly("a", &ButcherTableau::a)
        .def_readonly("b", &ButcherTableau::b)
        .def_readonly("c", &ButcherTableau::c)
        .def_property_readonly("stage_count", &ButcherTableau::stage_count)
        .def("__repr__", [](const ButcherTableau& t) {
            return "<ButcherTableau " + t.name + " order " +
                   std::to_string(t.declared_order) + ">";
        });

    m.def("builtin_tableaus", &builtin_tableaus, py::return_value_policy::reference);
    m.def("builtin_tableau", &builtin_tableau, py::arg("name"),
          py::return_value_policy::reference);
    m.def("rk_step", &rk_step, py::arg("tableau"), py::arg("rhs"), py::arg("t"),
          py::arg("y"), py::arg("h"));

    py::class_<IvpProblem>(m, "IvpProblem")
        .def(py::init<>())
        .def_readwrite("dimension", &IvpProblem::dimension)
        .def_readwrite("rhs", &IvpProblem::rhs)
        .def_readwrite("t0", &IvpProblem::t0)
        .def_readwrite("y0", &IvpProblem::y0)
        .def_readwrite("exact_solution", &IvpProblem::exact_solution);

    py::class_<HamiltonianProblem>(m, "HamiltonianProblem")
        .def_readonly("ivp", &HamiltonianProblem::ivp)
        .def_readonly("hamiltonian", &HamiltonianProblem::hamiltonian)
        .def_readonly("h_exact", &HamiltonianProblem::h_exact);

    m.def("pendulum_problem", &pendulum_problem);
    m.def("harmonic_problem", &harmonic_problem);
    m.def("eval_hamiltonian_error", &eval_hamiltonian_error, py::arg("problem"),
          py::arg("y"));
    m.def("empirical_order", &empirical_order, py::arg("tableau"), py::arg("problem"),
          py::arg("t_end"), py::arg("h_sequence"));

    py::enum_<ToleranceMode>(m, "ToleranceMode")
        .value("absolute", ToleranceMode::absolute)
        .value("relative", ToleranceMode::relative);

    py::class_<ToleranceSpec>(m, "ToleranceSpec")
        .def(py::init([](double delta_abs, double delta_rel, ToleranceMode mode) {
                 return ToleranceSpec{delta_abs, delta_rel, mode};
             }),
             py::arg("delta_abs") = 1e-6, py::arg("delta_rel") = 0.0,
             py::arg("mode") = ToleranceMode::absolute)
        .def_readwrite("delta_abs", &ToleranceSpec::delta_abs)
        .def_readwrite("delta_rel", &ToleranceSpec::delta_rel)
        .def_readwrite("mode", &ToleranceSpec::mode);

    m.def("tolerance_at", &tolerance_at, py::arg("y"), py::arg("spec"));

    py::class_<StepAttempt>(m, "StepAttempt")
        .def_readonly("y_low", &StepAttempt::y_low)
        .def_readonly("y_high", &StepAttempt::y_high)
        .def_readonly("local_error_estimate", &StepAttempt::local_error_estimate)
        .def_readonly("h_used", &StepAttempt::h_used);

    m.def("pair_step", &pair_step, py::arg("low"), py::arg("high"), py::arg("rhs"),
          py::arg("t"), py::arg("y"), py::arg("h"));
    m.def(
        "adapt_step",
        [](double err, double delta, double h_used, int r) {
            const StepControl ctrl = adapt_step(err, delta, h_used, r);
            return py::make_tuple(ctrl.accepted, ctrl.h_next);
        },
        py::arg("err"), py::arg("delta"), py::arg("h_used"), py::arg("r") = 3);

    m.def(
        "reference_step",
        [](const ButcherTableau& tab, const RhsFn& rhs, double t, const StateVector& y,
           double h) {
            const ReferenceStep ref = reference_step(tab, rhs, t, y, h);
            return py::make_tuple(ref.y_next, ref.eps);
        },
        py::arg("tableau"), py::arg("rhs"), py::arg("t"), py::arg("y"), py::arg("h"));
    m.def("propagate_global_error", &propagate_global_error, py::arg("delta_prev"),
          py::arg("eps"), py::arg("h"), py::arg("jac"));
    m.def("reference_error_guard", &reference_error_guard, py::arg("delta"),
          py::arg("delta_tol"), py::arg("margin") = 1e-3);

    py::class_<NodeRecord>(m, "NodeRecord")
        .def_readonly("index", &NodeRecord::index)
        .def_readonly("t", &NodeRecord::t)
        .def_readonly("h", &NodeRecord::h)
        .def_readonly("y34", &NodeRecord::y34)
        .def_readonly("y8", &NodeRecord::y8)
        .def_readonly("gerr", &NodeRecord::gerr)
        .def_readonly("eps8", &NodeRecord::eps8)
        .def_readonly("delta8", &NodeRecord::delta8)
        .def_readonly("quenched", &NodeRecord::quenched)
        .def_readonly("H34", &NodeRecord::H34)
        .def_readonly("H8", &NodeRecord::H8);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("t_end", &RunConfig::t_end)
        .def_readwrite("tolerance", &RunConfig::tolerance)
        .def_readwrite("h0", &RunConfig::h0)
        .def_readwrite("h_min", &RunConfig::h_min)
        .def_readwrite("quench_enabled", &RunConfig::quench_enabled)
        .def_readwrite("max_steps", &RunConfig::max_steps)
        .def_readwrite("subsample", &RunConfig::subsample);

    py::class_<RunSummary>(m, "RunSummary")
        .def_readonly("node_count", &RunSummary::node_count)
        .def_readonly("quench_count", &RunSummary::quench_count)
        .def_readonly("max_gerr_q", &RunSummary::max_gerr_q)
        .def_readonly("max_gerr_p", &RunSummary::max_gerr_p)
        .def_readonly("max_h_err", &RunSummary::max_h_err)
        .def_readonly("max_traj_err", &RunSummary::max_traj_err)
        .def_readonly("max_delta8", &RunSummary::max_delta8)
        .def_readonly("reference_guard_ok", &RunSummary::reference_guard_ok);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("nodes", &Trajectory::nodes)
        .def_readonly("summary", &Trajectory::summary)
        .def("__len__", [](const Trajectory& t) { return t.nodes.size(); });

    m.def("quench_decision", &quench_decision, py::arg("global_error_est"),
          py::arg("delta"));
    m.def("integrate", &integrate, py::arg("problem"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("integrate_unquenched", &integrate_unquenched, py::arg("problem"),
          py::arg("config"), py::call_guard<py::gil_scoped_release>());

    py::class_<DiagnosticsReport>(m, "DiagnosticsReport")
        .def_readonly("hamiltonian_error", &DiagnosticsReport::hamiltonian_error)
        .def_readonly("hamiltonian_bound", &DiagnosticsReport::hamiltonian_bound)
        .def_readonly("trajectory_error", &DiagnosticsReport::trajectory_error)
        .def_readonly("max_trajectory_error", &DiagnosticsReport::max_trajectory_error)
        .def_readonly("max_hamiltonian_error", &DiagnosticsReport::max_hamiltonian_error)
        .def_readonly("bound_violations", &DiagnosticsReport::bound_violations);

    m.def("hamiltonian_bound", &hamiltonian_bound, py::arg("problem"), py::arg("y8"),
          py::arg("delta"));
    m.def("trajectory_error", &trajectory_error, py::arg("y34"), py::arg("y8"));
    m.def("tolerance_series", &tolerance_series, py::arg("trajectory"), py::arg("spec"));
    m.def("diagnose", &diagnose, py::arg("trajectory"), py::arg("problem"),
          py::arg("delta_series"));

    m.def("write_trajectory_csv", &write_trajectory_csv, py::arg("trajectory"),
          py::arg("path"), py::arg("subsample") = 1);
    m.def("read_trajectory_csv", &read_trajectory_csv, py::arg("path"));
    m.def("write_summary", &write_summary, py::arg("summary"), py::arg("wall_time_s"),
          py::arg("path"));
    m.def("write_figures", &write_figures, py::arg("out_dir"), py::arg("rkq_rows"),
          py::arg("unquenched_rows"), py::arg("tol_abs"));

#ifdef RKQ_VERSION
#define RKQ_STR2(x) #x
#define RKQ_STR(x) RKQ_STR2(x)
    m.attr("__version__") = RKQ_STR(RKQ_VERSION);
#else
    m.attr("__version__") = "dev";
#endif
}
