// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.
//
// The criteria pin the quantitative estimates of the viscous approximation
// (maximum principle, energy, mollifier and BV bounds), the vanishing
// viscosity convergence behaviour against a Godunov oracle, the entropy
// certification of the limit, oracle cross-validation against exact Riemann
// solutions, and bit-exact determinism of the sweep outputs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "viscoflow/bv.hpp"
#include "viscoflow/csvio.hpp"
#include "viscoflow/entropy.hpp"
#include "viscoflow/estimates.hpp"

namespace fs = std::filesystem;
using namespace viscoflow;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

struct BatteryRun {
    std::string flux_name;
    std::string visc_name;
    FluxModel flux;
    ViscosityModel visc;
    ScalarField u0eps;
    SolveResult result;
    double seconds = 0.0;
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// Criteria 1, 2, 4, 5 all evaluate the same battery: every flux/viscosity
// pairing of the catalog on unit-step data, eps = 0.02, 512 cells, T = 0.5.
std::vector<BatteryRun> run_battery(const InitialData& u0) {
    std::vector<BatteryRun> runs;
    const Grid grid(u0.domain, 512);
    const ScalarField u0eps = mollify_data(u0, 0.02, grid);
    for (const char* fname : {"zero", "advection", "burgers"}) {
        for (const char* vname : {"constant", "rational"}) {
            BatteryRun r;
            r.flux_name = fname;
            r.visc_name = vname;
            r.flux = flux_by_name(fname);
            r.visc = viscosity_by_name(vname);
            r.u0eps = u0eps;
            SolverConfig cfg;
            cfg.epsilon = 0.02;
            cfg.n_cells = 512;
            cfg.T = 0.5;
            const auto t0 = Clock::now();
            r.result = solve(r.flux, r.visc, u0eps, cfg);
            r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            runs.push_back(std::move(r));
        }
    }
    return runs;
}

void criterion_1_max_principle(const std::vector<BatteryRun>& runs, const InitialData& u0) {
    bool pass = true;
    double worst_ratio = 0.0, worst_time = 0.0;
    for (const auto& r : runs) {
        const auto rep = max_principle_check(r.result, u0, 1e-10);
        worst_ratio = std::max(worst_ratio, rep.lhs / rep.rhs);
        worst_time = std::max(worst_time, r.seconds);
        pass = pass && rep.pass && r.seconds <= 10.0;
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "6 runs, worst sup ratio %.12f, slowest run %.2f s", worst_ratio,
                  worst_time);
    report(1, "maximum principle on the full catalog battery", pass, detail);
}

void criterion_2_energy(const std::vector<BatteryRun>& runs) {
    bool pass = true;
    double worst_margin = -1e300;
    for (const auto& r : runs) {
        const auto rep = energy_estimate_check(r.result, r.visc, r.u0eps, 0.05);
        worst_margin = std::max(worst_margin, rep.margin());
        pass = pass && rep.pass;
    }

    // Hypothesis F variant: sqrt-profile datum, rhs = Vol A^2 / (2r) * 1.05.
    const auto u0f = make_sqrt_profile_data(Domain1D(0.0, 1.0));
    const Grid grid(u0f.domain, 512);
    const auto u0eps_f = approximate_w11(u0f, 0.02, grid);
    SolverConfig cfg;
    cfg.epsilon = 0.02;
    cfg.n_cells = 512;
    cfg.T = 0.5;
    const auto visc = make_rational_viscosity();
    const auto run_f = solve(make_burgers_flux(), visc, u0eps_f, cfg);
    const double lhs_f = cfg.epsilon * grad_l2_sq_spacetime(run_f.solution);
    const double rhs_f = u0f.domain.volume() * u0f.a_bound * u0f.a_bound / (2.0 * visc.r_lower);
    const bool pass_f = lhs_f <= rhs_f * 1.05;
    pass = pass && pass_f;

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "battery worst margin %.3e; F variant lhs %.4g <= %.4g", worst_margin,
                  lhs_f, rhs_f * 1.05);
    report(2, "energy estimate, Hypothesis E battery + F variant", pass, detail);
}

void criterion_3_mollifier_bounds() {
    const Domain1D dom(0.0, 1.0);
    const std::vector<double> eps_list = {0.05, 0.025, 0.0125};
    bool pass = true;
    double worst_sup = 0.0, worst_tv = 0.0, step_variation = 0.0;
    for (const char* name : {"step", "hat"}) {
        const auto u0 = data_by_name(name, dom);
        const auto rep = verify_mollifier_bounds(u0, eps_list);
        double c_min = 1e300, c_max = 0.0;
        for (const auto& row : rep.rows) {
            worst_sup = std::max(worst_sup, row.sup_ratio);
            worst_tv = std::max(worst_tv, row.tv_ratio);
            pass = pass && row.sup_ratio <= 1.0 + 1e-8 && row.tv_ratio <= 1.0 + 1e-8;
            c_min = std::min(c_min, row.c_eps);
            c_max = std::max(c_max, row.c_eps);
        }
        // The scale-free laplacian constant is a property of jump data: the
        // step attains ||rho'||_L1 exactly at every scale. For the continuous
        // hat the quantity decays like eps by construction, so the stability
        // clause pins the step.
        if (std::string(name) == "step") {
            step_variation = c_max / c_min - 1.0;
            pass = pass && step_variation <= 0.10;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "worst sup ratio %.10f, worst tv ratio %.10f, step c-variation %.3f%%",
                  worst_sup, worst_tv, 100.0 * step_variation);
    report(3, "mollifier bounds across eps halvings", pass, detail);
}

void criterion_4_bv_space(const std::vector<BatteryRun>& runs, const InitialData& u0) {
    bool pass = true;
    double worst = 0.0;
    for (const auto& r : runs) {
        const auto rep = bv_space_report(r.result, u0, 0.05);
        worst = std::max(worst, rep.lhs / rep.rhs);
        pass = pass && rep.pass;
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "worst sup_t TV ratio %.6f", worst);
    report(4, "per-slice BV bound on the battery", pass, detail);
}

void criterion_5_bv_time(const std::vector<BatteryRun>& runs, const InitialData& u0) {
    bool pass = true;
    double worst = 0.0;
    bool degenerate_checked = false;
    for (const auto& r : runs) {
        const auto rep = bv_time_report(r.result, r.flux, r.visc, u0, 0.05);
        worst = std::max(worst, rep.rhs > 0 ? rep.lhs / rep.rhs : 0.0);
        pass = pass && rep.pass;
        if (r.visc_name == "constant") {
            // B' == 0: the first term must vanish identically, leaving
            // 2 sup_I |f'| TV(u0) + 2 ||u0||_inf Vol.
            const double f_sup = sampled_sup(r.flux.f_prime, -1.0, 1.0);
            const double two_term = 2.0 * f_sup * u0.tv_bound +
                                    2.0 * u0.linf_bound * u0.domain.volume();
            degenerate_checked = true;
            pass = pass && std::abs(rep.rhs - two_term) <= 1e-12 * two_term;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "worst lhs/rhs %.4f, constant-B reduction %s",
                  worst, degenerate_checked ? "verified" : "missing");
    report(5, "time-derivative bound with explicit constants", pass, detail);
}

SweepResult criterion_6_sweep(const InitialData& u0) {
    const auto t0 = Clock::now();
    SweepConfig cfg;
    cfg.T = 0.5;
    const auto sweep = run_sweep(make_burgers_flux(), make_rational_viscosity(), u0,
                                 {0.04, 0.02, 0.01, 0.005}, cfg);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();

    bool pass = !sweep.aborted && secs <= 300.0;
    bool cauchy_ok = sweep.cauchy_l1.size() == 3;
    for (size_t k = 0; k + 1 < sweep.cauchy_l1.size(); ++k) {
        cauchy_ok = cauchy_ok && sweep.cauchy_l1[k + 1] < sweep.cauchy_l1[k] &&
                    sweep.cauchy_l1[k + 1] / sweep.cauchy_l1[k] <= 0.9;
    }
    bool oracle_ok = true;
    for (size_t k = 0; k + 1 < sweep.oracle_l1.size(); ++k) {
        oracle_ok = oracle_ok && sweep.oracle_l1[k + 1] < sweep.oracle_l1[k];
    }
    const bool rate_ok = sweep.fitted_rate >= 0.3 && sweep.fitted_rate <= 1.1;
    pass = pass && cauchy_ok && oracle_ok && rate_ok && sweep.all_pass();

    std::ostringstream detail;
    detail << "cauchy";
    for (double c : sweep.cauchy_l1) detail << ' ' << c;
    detail << ", rate " << sweep.fitted_rate << ", " << secs << " s";
    report(6, "vanishing-viscosity compactness sweep", pass, detail.str());
    return sweep;
}

void criterion_7_entropy(const SweepResult& sweep) {
    bool pass = true;
    std::string detail;
    try {
        const auto rep = certify_limit(sweep, make_burgers_flux(), {-1.0, 1.0});
        pass = rep.all_pass();
        detail = "worst interior " + std::to_string(rep.worst_interior_residual) +
                 ", boundary " + std::to_string(rep.worst_boundary_residual);
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }

    // Checker sensitivity: the stationary expansion shock (a weak solution
    // violating the entropy condition) must produce a residual >= 0.1.
    SpaceTimeField bad;
    bad.grid = Grid(Domain1D(0.0, 1.0), 256);
    std::vector<double> vals(256);
    for (int i = 0; i < 256; ++i) {
        vals[i] = bad.grid.cell_center(i) < 0.5 ? -1.0 : 1.0;
    }
    for (int k = 0; k <= 200; ++k) {
        if (k == 0) {
            bad.append_slice(0.0, vals);
        } else {
            bad.append_slice(0.5 * k / 200.0, vals);
        }
    }
    const auto battery = standard_bump_battery(bad.grid.domain, 0.5);
    const double violation = interior_residual(bad, make_burgers_flux(), 0.0, battery);
    pass = pass && violation >= 0.1;
    detail += ", counterexample residual " + std::to_string(violation);
    report(7, "entropy certification of the limit + checker sensitivity", pass, detail);
}

void criterion_8_oracle_cross_validation() {
    const Domain1D dom(0.0, 1.0);
    const auto flux = make_burgers_flux();
    const double T = 0.5;

    // Shock case: compactly supported step; the exact solution is the fan
    // from 0.3 under the Rankine-Hugoniot shock from 0.7 (no interaction
    // before t = 0.8, both waves inside the domain at T = 0.5).
    const auto u0 = make_step_data(dom);
    const auto fan = solve_riemann(flux, 0.0, 1.0, 0.3);
    const auto shock = solve_riemann(flux, 1.0, 0.0, 0.7);
    std::vector<double> hs, errs;
    for (int n : {512, 1024, 2048, 4096}) {
        const auto res = godunov_reference(flux, u0, n, T);
        const auto last = res.solution.slice_field(res.solution.n_slices() - 1);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = last.grid.cell_center(i);
            const double exact =
                x >= shock.x0 + shock.shock_speed * T ? 0.0 : fan.evaluate(x, T);
            err += std::abs(last.values[i] - exact);
        }
        hs.push_back(last.grid.h);
        errs.push_back(err * last.grid.h);
    }
    const double rate = fit_rate_exponent(hs, errs);
    bool pass = rate >= 0.5;

    // Rarefaction case: step up at 0.3 with outflow-compatible right state;
    // errors must shrink monotonically under refinement.
    const auto rare_data = make_piecewise_linear_data(dom, {0.3, 0.3, 1.0},
                                                      {0.0, 1.0, 1.0}, Hypothesis::E,
                                                      "rarefaction_step");
    const auto rare = solve_riemann(flux, 0.0, 1.0, 0.3);
    double prev = 1e300;
    bool monotone = true;
    for (int n : {512, 1024, 2048}) {
        const auto res = godunov_reference(flux, rare_data, n, T);
        const auto last = res.solution.slice_field(res.solution.n_slices() - 1);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            err += std::abs(last.values[i] - rare.evaluate(last.grid.cell_center(i), T));
        }
        err *= last.grid.h;
        monotone = monotone && err < prev;
        prev = err;
    }
    pass = pass && monotone;
    char detail[120];
    std::snprintf(detail, sizeof(detail), "shock-case rate %.3f, rarefaction errors %s",
                  rate, monotone ? "monotone" : "not monotone");
    report(8, "Godunov oracle versus exact Riemann solutions", pass, detail);
}

void criterion_9_determinism() {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    SweepConfig cfg;
    cfg.T = 0.1;
    cfg.n_cells = 128;
    cfg.fine_factor = 4;
    const fs::path dir = fs::temp_directory_path() / "viscoflow_acceptance_det";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string report_a, conv_a, slices_a;
    bool pass = true;
    for (int rep = 0; rep < 2; ++rep) {
        const auto sweep = run_sweep(make_burgers_flux(), make_rational_viscosity(), u0,
                                     {0.08, 0.04, 0.02}, cfg);
        write_sweep_report_csv(sweep.reports, (dir / "sweep_report.csv").string());
        write_convergence_csv(sweep, (dir / "convergence.csv").string());
        write_slices_csv(sweep.runs.back().solution, (dir / "slices.csv").string());
        if (rep == 0) {
            report_a = slurp(dir / "sweep_report.csv");
            conv_a = slurp(dir / "convergence.csv");
            slices_a = slurp(dir / "slices.csv");
        } else {
            pass = report_a == slurp(dir / "sweep_report.csv") &&
                   conv_a == slurp(dir / "convergence.csv") &&
                   slices_a == slurp(dir / "slices.csv");
        }
    }
    fs::remove_all(dir);
    report(9, "bit-identical CSVs on repeated sweeps", pass,
           pass ? "all three artifacts identical" : "artifacts differ");
}

}  // namespace

int main() {
    const auto u0 = make_step_data(Domain1D(0.0, 1.0));

    const auto battery = run_battery(u0);
    criterion_1_max_principle(battery, u0);
    criterion_2_energy(battery);
    criterion_3_mollifier_bounds();
    criterion_4_bv_space(battery, u0);
    criterion_5_bv_time(battery, u0);
    const auto sweep = criterion_6_sweep(u0);
    criterion_7_entropy(sweep);
    criterion_8_oracle_cross_validation();
    criterion_9_determinism();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
