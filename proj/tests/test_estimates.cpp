#include <stdexcept>
#include <cmath>
#include <set>

#include "doctest.h"
#include "viscoflow/bv.hpp"
#include "viscoflow/csvio.hpp"
#include "viscoflow/entropy.hpp"
#include "viscoflow/estimates.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace viscoflow;

namespace {

SolveResult small_run(const FluxModel& flux, const ViscosityModel& visc,
                      const InitialData& u0, double eps, int n, double T) {
    const Grid grid(u0.domain, n);
    const auto u0eps = mollify_data(u0, eps, grid);
    SolverConfig cfg;
    cfg.epsilon = eps;
    cfg.n_cells = n;
    cfg.T = T;
    return solve(flux, visc, u0eps, cfg);
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("estimates_and_driver") {

TEST_CASE("bv_space_report: zero data and a nonlinear run") {
    const Domain1D dom(0.0, 1.0);
    auto zero = make_step_data(dom);
    zero.evaluate = [](double) { return 0.0; };
    zero.linf_bound = 0.0;
    zero.tv_bound = 0.0;
    const Grid grid(dom, 128);
    SolverConfig cfg;
    cfg.epsilon = 0.02;
    cfg.n_cells = 128;
    cfg.T = 0.05;
    const auto rz = solve(make_burgers_flux(), make_rational_viscosity(),
                          ScalarField(grid), cfg);
    CHECK(bv_space_report(rz, zero).pass);

    const auto u0 = make_step_data(dom);
    const auto run = small_run(make_burgers_flux(), make_rational_viscosity(), u0,
                               0.02, 256, 0.2);
    const auto rep = bv_space_report(run, u0);
    CHECK(rep.name == "bv_space");
    CHECK(rep.pass);
    CHECK(rep.lhs <= rep.rhs * 1.05);
}

TEST_CASE("per-slice TV is nonincreasing for hat data under linear advection") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_hat_data(dom);
    const auto run = small_run(make_advection_flux(), make_constant_viscosity(), u0,
                               0.04, 256, 0.2);
    double prev = 1e300;
    for (int k = 0; k < run.solution.n_slices(); ++k) {
        const double tv = total_variation(run.solution.slice_field(k));
        CHECK(tv <= prev + 1e-10);
        prev = tv;
    }
}

TEST_CASE("bv_time_report: constant-B case drops the first term") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    const auto flux = make_burgers_flux();
    const auto run = small_run(flux, make_constant_viscosity(), u0, 0.02, 256, 0.2);
    const auto rep = bv_time_report(run, flux, make_constant_viscosity(), u0);
    // B' == 0: rhs reduces to 2 sup|f'| TV + 2 ||u0||_inf Vol exactly
    const double expected_rhs = 2.0 * 1.0 * 2.0 + 2.0 * 1.0 * 1.0;
    CHECK(rep.rhs == doctest::Approx(expected_rhs).epsilon(1e-12));
    CHECK(rep.pass);

    // nonconstant B adds the positive first term
    const auto rep2 = bv_time_report(run, flux, make_rational_viscosity(), u0);
    CHECK(rep2.rhs > expected_rhs);
}

TEST_CASE("bv_time_report holds for step data with nonconstant B") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    const auto flux = make_burgers_flux();
    const auto visc = make_rational_viscosity();
    const auto run = small_run(flux, visc, u0, 0.01, 512, 0.5);
    const auto rep = bv_time_report(run, flux, visc, u0);
    INFO("lhs = ", rep.lhs, ", rhs = ", rep.rhs);
    CHECK(rep.pass);
    CHECK(rep.lhs > 0.0);
}

TEST_CASE("time_deriv_l1 is stable under store-cadence refinement") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    const Grid grid(dom, 256);
    const auto u0eps = mollify_data(u0, 0.02, grid);
    SolverConfig cfg;
    cfg.epsilon = 0.02;
    cfg.n_cells = 256;
    cfg.T = 0.2;
    const auto coarse = solve(make_burgers_flux(), make_rational_viscosity(), u0eps, cfg);
    SolverConfig cfg2 = cfg;
    cfg2.store_every = std::max<long>(1, coarse.steps / 400);  // twice the slices
    const auto fine = solve(make_burgers_flux(), make_rational_viscosity(), u0eps, cfg2);
    const double a = time_deriv_l1(coarse.solution);
    const double b = time_deriv_l1(fine.solution);
    CHECK(std::abs(a - b) / b <= 0.02);
}

TEST_CASE("bv aggregate info reports both space-time aggregates") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    const auto run = small_run(make_burgers_flux(), make_rational_viscosity(), u0,
                               0.02, 256, 0.2);
    const auto info = bv_aggregate_info(run, u0);
    CHECK(info.tv0 == 2.0);
    CHECK(info.t_times_tv0 == doctest::Approx(0.4));
    CHECK(info.grad_l1_spacetime > 0.0);
    CHECK(info.grad_l1_spacetime <= info.t_times_tv0 * 1.05);
}

TEST_CASE("l1_distance_spacetime on mismatched and analytic inputs") {
    const Grid g(Domain1D(0.0, 1.0), 4);
    SpaceTimeField a, b;
    a.grid = b.grid = g;
    a.append_slice(0.0, {1, 1, 1, 1});
    a.append_slice(1.0, {1, 1, 1, 1});
    b.append_slice(0.0, {0, 0, 0, 0});
    b.append_slice(0.4, {0, 0, 0, 0});
    b.append_slice(1.0, {0, 0, 0, 0});
    // constant difference 1 over volume 1 x time 1
    CHECK(l1_distance_spacetime(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(l1_distance_spacetime(a, a) == 0.0);

    SpaceTimeField c;
    c.grid = Grid(Domain1D(0.0, 1.0), 8);
    c.append_slice(0.0, std::vector<double>(8, 0.0));
    c.append_slice(1.0, std::vector<double>(8, 0.0));
    CHECK_THROWS_AS(l1_distance_spacetime(a, c), std::invalid_argument);
}

TEST_CASE("restrict_to_grid block averages") {
    SpaceTimeField fine;
    fine.grid = Grid(Domain1D(0.0, 1.0), 8);
    fine.append_slice(0.0, {1, 3, 2, 2, 0, 4, 5, 7});
    const Grid coarse(Domain1D(0.0, 1.0), 4);
    const auto out = restrict_to_grid(fine, coarse);
    CHECK(out.slices[0] == std::vector<double>{2, 2, 2, 6});
    CHECK_THROWS_AS(restrict_to_grid(fine, Grid(Domain1D(0.0, 1.0), 3)),
                    std::invalid_argument);
}

TEST_CASE("fit_rate_exponent recovers a synthetic power law") {
    std::vector<double> eps = {0.08, 0.04, 0.02, 0.01};
    std::vector<double> dist;
    for (double e : eps) dist.push_back(3.7 * std::pow(e, 0.7));
    CHECK(fit_rate_exponent(eps, dist) == doctest::Approx(0.7).epsilon(1e-10));
    CHECK_THROWS_AS(fit_rate_exponent({0.1}, {0.1}), std::invalid_argument);
}

TEST_CASE("run_sweep input validation") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    SweepConfig cfg;
    CHECK_THROWS_AS(run_sweep(make_burgers_flux(), make_constant_viscosity(), u0,
                              {0.04, 0.02}, cfg),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(make_burgers_flux(), make_constant_viscosity(), u0,
                              {0.02, 0.04, 0.01}, cfg),
                    std::invalid_argument);
}

TEST_CASE("run_sweep: zero data yields all-zero norms and passing reports") {
    const Domain1D dom(0.0, 1.0);
    auto zero = make_step_data(dom);
    zero.evaluate = [](double) { return 0.0; };
    zero.linf_bound = 0.0;
    zero.tv_bound = 0.0;
    SweepConfig cfg;
    cfg.T = 0.1;
    cfg.n_cells = 64;
    cfg.fine_factor = 4;
    const auto sweep = run_sweep(make_burgers_flux(), make_constant_viscosity(), zero,
                                 {0.08, 0.04, 0.02}, cfg);
    CHECK_FALSE(sweep.aborted);
    for (double c : sweep.cauchy_l1) CHECK(c == 0.0);
    for (double d : sweep.oracle_l1) CHECK(d == 0.0);
    CHECK(sweep.all_pass());
}

TEST_CASE("run_sweep on a small Burgers shock: Cauchy decay and report set") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    SweepConfig cfg;
    cfg.T = 0.2;
    cfg.fine_factor = 8;
    const auto sweep = run_sweep(make_burgers_flux(), make_rational_viscosity(), u0,
                                 {0.08, 0.04, 0.02}, cfg);
    CHECK_FALSE(sweep.aborted);
    REQUIRE(sweep.cauchy_l1.size() == 2);
    CHECK(sweep.cauchy_l1[1] < sweep.cauchy_l1[0]);
    REQUIRE(sweep.oracle_l1.size() == 3);
    CHECK(sweep.oracle_l1[2] < sweep.oracle_l1[0]);
    CHECK(sweep.all_pass());

    // the Hypothesis E report set, per run and in aggregate
    std::set<std::string> names;
    for (const auto& row : sweep.reports) names.insert(row.report.name);
    const std::set<std::string> expected = {"max_principle",  "energy",
                                            "bv_space",       "bv_time",
                                            "mollifier_sup",  "mollifier_tv",
                                            "mollifier_laplacian"};
    CHECK(names == expected);
    for (double eps : sweep.eps_list) {
        std::set<std::string> per_eps;
        for (const auto& row : sweep.reports) {
            if (row.eps == eps) per_eps.insert(row.report.name);
        }
        CHECK(per_eps == std::set<std::string>{"max_principle", "energy", "bv_space",
                                               "bv_time", "mollifier_sup",
                                               "mollifier_tv"});
    }
}

TEST_CASE("run_sweep under Hypothesis F covers the F report set") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_sqrt_profile_data(dom);
    SweepConfig cfg;
    cfg.T = 0.1;
    cfg.n_cells = 128;
    cfg.fine_factor = 4;
    const auto sweep = run_sweep(make_burgers_flux(), make_rational_viscosity(), u0,
                                 {0.08, 0.04, 0.02}, cfg);
    CHECK_FALSE(sweep.aborted);
    std::set<std::string> names;
    for (const auto& row : sweep.reports) names.insert(row.report.name);
    const std::set<std::string> expected = {"max_principle", "energy", "bv_time",
                                            "bv_space_bounded", "w11_sup",
                                            "w11_convergence"};
    CHECK(names == expected);
    CHECK(sweep.all_pass());
}

TEST_CASE("run_sweep aborts with partial results on a failing level") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    SweepConfig cfg;
    cfg.T = 0.05;
    cfg.n_cells = 64;
    // the first epsilon exceeds the support margin: mollification must fail
    const auto sweep = run_sweep(make_burgers_flux(), make_constant_viscosity(), u0,
                                 {0.4, 0.2, 0.1}, cfg);
    CHECK(sweep.aborted);
    CHECK(sweep.abort_reason.find("failed") != std::string::npos);
    CHECK_FALSE(sweep.all_pass());
}

TEST_CASE("sweep CSV outputs are deterministic") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    SweepConfig cfg;
    cfg.T = 0.05;
    cfg.n_cells = 64;
    cfg.fine_factor = 4;
    const auto dir = std::filesystem::temp_directory_path() / "viscoflow_det_test";
    std::filesystem::create_directories(dir);
    std::string first_report, first_conv;
    for (int rep = 0; rep < 2; ++rep) {
        const auto sweep = run_sweep(make_burgers_flux(), make_rational_viscosity(), u0,
                                     {0.08, 0.04, 0.02}, cfg);
        const auto report_path = (dir / "sweep_report.csv").string();
        const auto conv_path = (dir / "convergence.csv").string();
        write_sweep_report_csv(sweep.reports, report_path);
        write_convergence_csv(sweep, conv_path);
        if (rep == 0) {
            first_report = slurp(report_path);
            first_conv = slurp(conv_path);
        } else {
            CHECK(slurp(report_path) == first_report);
            CHECK(slurp(conv_path) == first_conv);
        }
    }
    std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
