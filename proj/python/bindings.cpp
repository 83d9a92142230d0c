#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "viscoflow/bv.hpp"
#include "viscoflow/entropy.hpp"
#include "viscoflow/estimates.hpp"

namespace py = pybind11;
using namespace viscoflow;

PYBIND11_MODULE(_viscoflow, m) {
    m.doc() = "viscous approximations of scalar conservation laws: solver, "
              "mollification, BV/energy estimate checks and entropy certification";

    py::class_<Domain1D>(m, "Domain1D")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readonly("a", &Domain1D::a)
        .def_readonly("b", &Domain1D::b)
        .def("volume", &Domain1D::volume);

    py::class_<Grid>(m, "Grid")
        .def(py::init<Domain1D, int>(), py::arg("domain"), py::arg("n_cells"))
        .def_readonly("domain", &Grid::domain)
        .def_readonly("n_cells", &Grid::n_cells)
        .def_readonly("h", &Grid::h)
        .def("cell_center", &Grid::cell_center);

    py::class_<ScalarField>(m, "ScalarField")
        .def(py::init<const Grid&>())
        .def(py::init<const Grid&, std::vector<double>>())
        .def_readonly("grid", &ScalarField::grid)
        .def_readwrite("values", &ScalarField::values);

    py::class_<SpaceTimeField>(m, "SpaceTimeField")
        .def_readonly("grid", &SpaceTimeField::grid)
        .def_readonly("times", &SpaceTimeField::times)
        .def_readonly("slices", &SpaceTimeField::slices)
        .def("n_slices", &SpaceTimeField::n_slices)
        .def("slice_field", &SpaceTimeField::slice_field);

    m.def("sample_function", &sample_function);
    m.def("norm_l1", &norm_l1);
    m.def("norm_l2_sq", &norm_l2_sq);
    m.def("norm_linf", &norm_linf);
    m.def("integrate_time", &integrate_time);

    m.def("sg_n_eval", &sg_n_eval, py::arg("n"), py::arg("s"));
    m.def("sg_eval", &sg_eval, py::arg("s"));
    m.def("total_variation", &total_variation);
    m.def("space_bv_l1", &space_bv_l1);
    m.def("time_deriv_l1", &time_deriv_l1);

    py::enum_<Hypothesis>(m, "Hypothesis")
        .value("E", Hypothesis::E)
        .value("F", Hypothesis::F);

    py::class_<FluxModel>(m, "FluxModel")
        .def_readonly("name", &FluxModel::name)
        .def_readonly("lipschitz_bound", &FluxModel::lipschitz_bound)
        .def("f", [](const FluxModel& f, double y) { return f.f(y); })
        .def("f_prime", [](const FluxModel& f, double y) { return f.f_prime(y); });

    py::class_<ViscosityModel>(m, "ViscosityModel")
        .def_readonly("name", &ViscosityModel::name)
        .def_readonly("r_lower", &ViscosityModel::r_lower)
        .def_readonly("B_sup", &ViscosityModel::B_sup)
        .def("B", [](const ViscosityModel& v, double y) { return v.B(y); })
        .def("B_prime", [](const ViscosityModel& v, double y) { return v.B_prime(y); });

    py::class_<InitialData>(m, "InitialData")
        .def_readonly("name", &InitialData::name)
        .def_readonly("hypothesis", &InitialData::hypothesis)
        .def_readonly("domain", &InitialData::domain)
        .def_readonly("linf_bound", &InitialData::linf_bound)
        .def_readonly("tv_bound", &InitialData::tv_bound)
        .def_readonly("w11_seminorm", &InitialData::w11_seminorm)
        .def_readonly("support_margin", &InitialData::support_margin)
        .def_readonly("a_bound", &InitialData::a_bound)
        .def("evaluate", [](const InitialData& d, double x) { return d.evaluate(x); });

    m.def("flux_by_name", &flux_by_name, py::arg("name"), py::arg("advection_speed") = 1.0);
    m.def("viscosity_by_name", &viscosity_by_name);
    m.def("data_by_name", &data_by_name, py::arg("name"), py::arg("domain"));
    m.def("piecewise_linear_data", &make_piecewise_linear_data, py::arg("domain"),
          py::arg("xs"), py::arg("vs"), py::arg("hypothesis"),
          py::arg("name") = "piecewise_linear");
    m.def("clamp_flux", &clamp_flux);
    m.def("data_interval",
          [](const InitialData& d) {
              const Interval I = data_interval(d);
              return std::make_pair(I.lo, I.hi);
          });

    py::class_<HypothesisClause>(m, "HypothesisClause")
        .def_readonly("clause", &HypothesisClause::clause)
        .def_readonly("pass_", &HypothesisClause::pass)
        .def_readonly("detail", &HypothesisClause::detail);
    py::class_<HypothesisReport>(m, "HypothesisReport")
        .def_readonly("clauses", &HypothesisReport::clauses)
        .def("all_pass", &HypothesisReport::all_pass);
    m.def("validate_hypothesis", &validate_hypothesis);

    m.def("mollify_data", &mollify_data, py::arg("u0"), py::arg("eps"), py::arg("grid"));
    m.def("approximate_w11", &approximate_w11, py::arg("u0"), py::arg("eps"),
          py::arg("grid"));
    m.def("mollify_flux", &mollify_flux, py::arg("flux"), py::arg("eps"));
    py::class_<MollifierBoundsRow>(m, "MollifierBoundsRow")
        .def_readonly("eps", &MollifierBoundsRow::eps)
        .def_readonly("sup_ratio", &MollifierBoundsRow::sup_ratio)
        .def_readonly("tv_ratio", &MollifierBoundsRow::tv_ratio)
        .def_readonly("c_eps", &MollifierBoundsRow::c_eps);
    py::class_<MollifierBoundsReport>(m, "MollifierBoundsReport")
        .def_readonly("rows", &MollifierBoundsReport::rows)
        .def_readonly("empirical_c", &MollifierBoundsReport::empirical_c);
    m.def("verify_mollifier_bounds", &verify_mollifier_bounds);

    py::enum_<Scheme>(m, "Scheme")
        .value("engquist_osher", Scheme::engquist_osher)
        .value("godunov_flux", Scheme::godunov_flux)
        .value("lax_friedrichs", Scheme::lax_friedrichs);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("epsilon", &SolverConfig::epsilon)
        .def_readwrite("n_cells", &SolverConfig::n_cells)
        .def_readwrite("T", &SolverConfig::T)
        .def_readwrite("cfl_safety", &SolverConfig::cfl_safety)
        .def_readwrite("store_every", &SolverConfig::store_every)
        .def_readwrite("scheme", &SolverConfig::scheme)
        .def_readwrite("diffusion_bias", &SolverConfig::diffusion_bias);

    py::class_<StepDiagnostics>(m, "StepDiagnostics")
        .def_readonly("step", &StepDiagnostics::step)
        .def_readonly("t", &StepDiagnostics::t)
        .def_readonly("mass", &StepDiagnostics::mass)
        .def_readonly("linf", &StepDiagnostics::linf);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("solution", &SolveResult::solution)
        .def_readonly("dt_used", &SolveResult::dt_used)
        .def_readonly("steps", &SolveResult::steps)
        .def_readonly("max_abs", &SolveResult::max_abs)
        .def_readonly("diagnostics", &SolveResult::diagnostics)
        .def_readonly("outflux_left", &SolveResult::outflux_left)
        .def_readonly("outflux_right", &SolveResult::outflux_right)
        .def_readonly("monotone_cfl_ok", &SolveResult::monotone_cfl_ok)
        .def_readonly("resolution_ok", &SolveResult::resolution_ok)
        .def_readonly("max_growth_detected", &SolveResult::max_growth_detected);

    m.def("solve", &solve, py::arg("flux"), py::arg("visc"), py::arg("u0eps"),
          py::arg("config"));

    py::class_<EstimateReport>(m, "EstimateReport")
        .def_readonly("name", &EstimateReport::name)
        .def_readonly("lhs", &EstimateReport::lhs)
        .def_readonly("rhs", &EstimateReport::rhs)
        .def_readonly("tolerance", &EstimateReport::tolerance)
        .def_readonly("pass_", &EstimateReport::pass)
        .def_readonly("provenance", &EstimateReport::provenance);

    m.def("max_principle_check", &max_principle_check, py::arg("result"), py::arg("u0"),
          py::arg("tol") = 1e-10);
    m.def("energy_estimate_check", &energy_estimate_check, py::arg("result"),
          py::arg("visc"), py::arg("u0eps"), py::arg("tol") = 0.05);
    m.def("bv_space_report", &bv_space_report, py::arg("result"), py::arg("u0"),
          py::arg("tol") = 0.05);
    m.def("bv_time_report", &bv_time_report, py::arg("result"), py::arg("flux"),
          py::arg("visc"), py::arg("u0"), py::arg("tol") = 0.05);

    py::class_<RiemannSolution>(m, "RiemannSolution")
        .def_readonly("u_left", &RiemannSolution::u_left)
        .def_readonly("u_right", &RiemannSolution::u_right)
        .def_readonly("shock_speed", &RiemannSolution::shock_speed)
        .def_readonly("fan_lo", &RiemannSolution::fan_lo)
        .def_readonly("fan_hi", &RiemannSolution::fan_hi)
        .def("is_shock",
             [](const RiemannSolution& s) {
                 return s.wave == RiemannSolution::Wave::shock;
             })
        .def("is_rarefaction",
             [](const RiemannSolution& s) {
                 return s.wave == RiemannSolution::Wave::rarefaction;
             })
        .def("evaluate", &RiemannSolution::evaluate, py::arg("x"), py::arg("t"));
    m.def("solve_riemann", &solve_riemann, py::arg("flux"), py::arg("uL"), py::arg("uR"),
          py::arg("x0") = 0.0);

    py::class_<GodunovResult>(m, "GodunovResult")
        .def_readonly("solution", &GodunovResult::solution)
        .def_readonly("dt_used", &GodunovResult::dt_used)
        .def_readonly("steps", &GodunovResult::steps)
        .def_readonly("outflux_left", &GodunovResult::outflux_left)
        .def_readonly("outflux_right", &GodunovResult::outflux_right);
    m.def("godunov_reference", &godunov_reference, py::arg("flux"), py::arg("u0"),
          py::arg("fine_cells"), py::arg("T"), py::arg("cfl_safety") = 0.8,
          py::arg("store_every") = 0);

    py::class_<BumpTestFunction>(m, "BumpTestFunction")
        .def_readonly("id", &BumpTestFunction::id)
        .def("value", &BumpTestFunction::value)
        .def("ddx", &BumpTestFunction::ddx)
        .def("ddt", &BumpTestFunction::ddt);
    m.def("standard_bump_battery", &standard_bump_battery);
    m.def("interior_residual", &interior_residual);
    m.def("interior_residual_single", &interior_residual_single);
    m.def("boundary_residual", &boundary_residual, py::arg("stf"), py::arg("flux"),
          py::arg("levels") = 9);
    m.def("kruzhkov_levels",
          [](double lo, double hi, int count) {
              return kruzhkov_levels({lo, hi}, count);
          },
          py::arg("lo"), py::arg("hi"), py::arg("count") = 9);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("n_cells", &SweepConfig::n_cells)
        .def_readwrite("T", &SweepConfig::T)
        .def_readwrite("cfl_safety", &SweepConfig::cfl_safety)
        .def_readwrite("scheme", &SweepConfig::scheme)
        .def_readwrite("store_every", &SweepConfig::store_every)
        .def_readwrite("fine_factor", &SweepConfig::fine_factor)
        .def_readwrite("tol_maxp", &SweepConfig::tol_maxp)
        .def_readwrite("tol_energy", &SweepConfig::tol_energy)
        .def_readwrite("tol_bv", &SweepConfig::tol_bv);

    py::class_<SweepReportRow>(m, "SweepReportRow")
        .def_readonly("eps", &SweepReportRow::eps)
        .def_readonly("report", &SweepReportRow::report);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("eps_list", &SweepResult::eps_list)
        .def_readonly("runs", &SweepResult::runs)
        .def_readonly("oracle", &SweepResult::oracle)
        .def_readonly("cauchy_l1", &SweepResult::cauchy_l1)
        .def_readonly("oracle_l1", &SweepResult::oracle_l1)
        .def_readonly("fitted_rate", &SweepResult::fitted_rate)
        .def_readonly("reports", &SweepResult::reports)
        .def_readonly("aborted", &SweepResult::aborted)
        .def_readonly("abort_reason", &SweepResult::abort_reason)
        .def("all_pass", &SweepResult::all_pass);
    m.def("run_sweep", &run_sweep, py::arg("flux"), py::arg("visc"), py::arg("u0"),
          py::arg("eps_list"), py::arg("config"));

    py::class_<EntropyRow>(m, "EntropyRow")
        .def_readonly("kind", &EntropyRow::kind)
        .def_readonly("k", &EntropyRow::k)
        .def_readonly("testfn_id", &EntropyRow::testfn_id)
        .def_readonly("residual", &EntropyRow::residual)
        .def_readonly("tolerance", &EntropyRow::tolerance)
        .def_readonly("pass_", &EntropyRow::pass);
    py::class_<EntropyReport>(m, "EntropyReport")
        .def_readonly("levels", &EntropyReport::levels)
        .def_readonly("worst_interior_residual", &EntropyReport::worst_interior_residual)
        .def_readonly("worst_boundary_residual", &EntropyReport::worst_boundary_residual)
        .def_readonly("test_function_count", &EntropyReport::test_function_count)
        .def_readonly("rows", &EntropyReport::rows)
        .def("all_pass", &EntropyReport::all_pass);
    m.def("certify_limit",
          [](const SweepResult& sweep, const FluxModel& flux, double lo, double hi,
             double c_tol) {
              EntropyTolerances tols;
              if (c_tol > 0.0) tols.c_tol = c_tol;
              return certify_limit(sweep, flux, {lo, hi}, tols);
          },
          py::arg("sweep"), py::arg("flux"), py::arg("lo"), py::arg("hi"),
          py::arg("c_tol") = -1.0);

    m.def("l1_distance_spacetime", &l1_distance_spacetime);
    m.def("fit_rate_exponent", &fit_rate_exponent);
}
