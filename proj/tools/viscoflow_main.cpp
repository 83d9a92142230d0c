// viscoflow: solve quasilinear viscous approximations of scalar conservation
// laws on a bounded interval, verify the quantitative estimates behind them,
// and certify vanishing-viscosity limits against an entropy-solution oracle.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "viscoflow/bv.hpp"
#include "viscoflow/config.hpp"
#include "viscoflow/csvio.hpp"
#include "viscoflow/entropy.hpp"
#include "viscoflow/estimates.hpp"

namespace fs = std::filesystem;
using namespace viscoflow;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEstimateFailure = 2;

const std::set<std::string> kConfigKeys = {
    "flux",       "advection_speed", "viscosity",  "data",        "data_csv",
    "hypothesis", "domain_a",       "domain_b",    "eps",         "eps_list",
    "n_cells",    "T",              "cfl_safety",  "store_every", "scheme",
    "fine_factor", "tol_maxp",      "tol_energy",  "tol_bv",      "c_tol",
    "diffusion_bias",
};

std::string short_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Problem {
    FluxModel flux;
    ViscosityModel visc;
    InitialData data;
    Domain1D domain;
};

Problem load_problem(const ConfigMap& cfg) {
    Problem p;
    p.domain = Domain1D(cfg.get_real("domain_a", 0.0), cfg.get_real("domain_b", 1.0));
    p.flux = flux_by_name(cfg.get_string("flux"), cfg.get_real("advection_speed", 1.0));
    p.visc = viscosity_by_name(cfg.get_string("viscosity", "constant"));
    if (cfg.has("data_csv")) {
        const std::string hyp = cfg.get_string("hypothesis");
        if (hyp != "E" && hyp != "F") {
            throw std::runtime_error("config: hypothesis must be E or F");
        }
        p.data = load_piecewise_linear_csv(p.domain, cfg.get_string("data_csv"),
                                           hyp == "E" ? Hypothesis::E : Hypothesis::F);
    } else {
        p.data = data_by_name(cfg.get_string("data"), p.domain);
    }
    return p;
}

SolverConfig load_solver_config(const ConfigMap& cfg) {
    SolverConfig sc;
    sc.epsilon = cfg.get_real("eps");
    sc.n_cells = cfg.get_int("n_cells", 512);
    sc.T = cfg.get_real("T", 0.5);
    sc.cfl_safety = cfg.get_real("cfl_safety", 0.8);
    sc.store_every = cfg.get_int("store_every", 0);
    sc.scheme = scheme_from_string(cfg.get_string("scheme", "engquist_osher"));
    sc.diffusion_bias = cfg.get_real("diffusion_bias", 0.0);
    sc.validate();
    return sc;
}

void copy_config(const ConfigMap& cfg, const fs::path& out_dir) {
    std::ofstream os(out_dir / "config.cfg");
    for (const auto& [key, value] : cfg.entries()) {
        os << key << " = " << value << '\n';
    }
}

void write_reference_diagnostics(const GodunovResult& res, const std::string& path) {
    std::vector<StepDiagnostics> rows;
    for (int k = 0; k < res.solution.n_slices(); ++k) {
        const auto f = res.solution.slice_field(k);
        double mass = 0.0;
        for (double v : f.values) mass += v;
        rows.push_back({k, res.solution.times[k], f.grid.h * mass, norm_linf(f)});
    }
    write_diagnostics_csv(rows, path);
}

void print_reports(const std::vector<EstimateReport>& reports) {
    for (const auto& r : reports) {
        std::printf("[%s] %-20s lhs=%.6g rhs=%.6g tol=%.3g  (%s)\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.lhs, r.rhs, r.tolerance,
                    r.provenance.c_str());
    }
}

int cmd_prepare(const std::string& hypothesis, const std::string& data_name, double eps,
                int n_cells, double domain_a, double domain_b, const std::string& out) {
    const Domain1D domain(domain_a, domain_b);
    const InitialData data = data_by_name(data_name, domain);
    const Grid grid(domain, n_cells);
    fs::create_directories(out);
    const fs::path dir(out);

    if (hypothesis == "E") {
        if (data.hypothesis != Hypothesis::E) {
            throw std::runtime_error("prepare: datum '" + data_name + "' is not Hypothesis E");
        }
        const auto field = mollify_data(data, eps, grid);
        write_field_csv(field, (dir / "u0eps.csv").string());
        const std::vector<double> eps_list = {eps, 0.5 * eps, 0.25 * eps};
        const auto bounds = verify_mollifier_bounds(data, eps_list);
        write_mollifier_bounds_csv(bounds, (dir / "mollifier_bounds.csv").string());
        bool ok = true;
        double c_min = 1e300, c_max = 0.0;
        for (const auto& row : bounds.rows) {
            ok = ok && row.sup_ratio <= 1.0 + 1e-8 && row.tv_ratio <= 1.0 + 1e-8;
            c_min = std::min(c_min, row.c_eps);
            c_max = std::max(c_max, row.c_eps);
        }
        std::printf("mollifier bounds: sup/TV ratios %s, empirical laplacian constant %.4g\n",
                    ok ? "within bounds" : "VIOLATED", bounds.empirical_c);
        return ok ? kExitPass : kExitEstimateFailure;
    }
    if (hypothesis == "F") {
        if (data.hypothesis != Hypothesis::F) {
            throw std::runtime_error("prepare: datum '" + data_name + "' is not Hypothesis F");
        }
        const auto field = approximate_w11(data, eps, grid);
        write_field_csv(field, (dir / "u0eps.csv").string());
        std::ofstream os(dir / "w11_bounds.csv");
        os << "eps,sup_ratio,w11_error\n";
        bool ok = true;
        double prev = -1.0;
        for (double e : {eps, 0.5 * eps, 0.25 * eps}) {
            const auto f = approximate_w11(data, e, grid);
            const double sup_ratio = norm_linf(f) / data.a_bound;
            const double err = data.evaluate_deriv ? w11_approx_error(data, e) : -1.0;
            os << format_real(e) << ',' << format_real(sup_ratio) << ','
               << format_real(err) << '\n';
            ok = ok && sup_ratio <= 1.0 + 1e-8;
            if (prev >= 0.0 && err >= 0.0) ok = ok && err <= prev * (1.0 + 1e-9);
            prev = err;
        }
        return ok ? kExitPass : kExitEstimateFailure;
    }
    throw std::runtime_error("prepare: hypothesis must be E or F");
}

int cmd_solve(const std::string& config_path, const std::string& out) {
    const auto cfg = ConfigMap::load(config_path);
    cfg.validate_keys(kConfigKeys);
    const Problem p = load_problem(cfg);
    const SolverConfig sc = load_solver_config(cfg);

    const auto hyp_report = validate_hypothesis(p.flux, p.visc, p.data);
    if (!hyp_report.all_pass()) {
        std::fprintf(stderr, "hypothesis validation failed:\n");
        for (const auto& c : hyp_report.clauses) {
            if (!c.pass) std::fprintf(stderr, "  [FAIL] %s (%s)\n", c.clause.c_str(),
                                      c.detail.c_str());
        }
        return kExitUsage;
    }

    const Grid grid(p.domain, sc.n_cells);
    const ScalarField u0eps = p.data.hypothesis == Hypothesis::E
                                  ? mollify_data(p.data, sc.epsilon, grid)
                                  : approximate_w11(p.data, sc.epsilon, grid);
    const SolveResult res = solve(p.flux, p.visc, u0eps, sc);

    fs::create_directories(out);
    const fs::path dir(out);
    copy_config(cfg, dir);
    write_field_csv(u0eps, (dir / "u0eps.csv").string());
    write_slices_csv(res.solution, (dir / "slices.csv").string());
    write_diagnostics_csv(res.diagnostics, (dir / "diagnostics.csv").string());
    if (!res.resolution_ok) {
        std::fprintf(stderr,
                     "warning: h = %g exceeds eps/4 = %g; boundary layers are "
                     "under-resolved\n",
                     grid.h, sc.epsilon / 4.0);
    }

    std::vector<EstimateReport> reports;
    reports.push_back(max_principle_check(res, p.data, cfg.get_real("tol_maxp", 1e-10)));
    const double tol_energy = cfg.get_real("tol_energy", 0.05);
    const double tol_bv = cfg.get_real("tol_bv", 0.05);
    if (p.data.hypothesis == Hypothesis::E) {
        reports.push_back(energy_estimate_check(res, p.visc, u0eps, tol_energy));
        reports.push_back(bv_space_report(res, p.data, tol_bv));
        reports.push_back(bv_time_report(res, p.flux, p.visc, p.data, tol_bv));
        const std::vector<double> eps_list = {sc.epsilon, 0.5 * sc.epsilon,
                                              0.25 * sc.epsilon};
        const auto bounds = verify_mollifier_bounds(p.data, eps_list);
        write_mollifier_bounds_csv(bounds, (dir / "mollifier_bounds.csv").string());
        double c_min = 1e300, c_max = 0.0;
        for (const auto& row : bounds.rows) {
            c_min = std::min(c_min, row.c_eps);
            c_max = std::max(c_max, row.c_eps);
        }
        const auto& head = bounds.rows.front();
        reports.push_back(EstimateReport::make("mollifier_sup",
                                               head.sup_ratio * p.data.linf_bound,
                                               p.data.linf_bound, 1e-8,
                                               "||u0eps||_inf <= ||u0||_inf"));
        reports.push_back(EstimateReport::make("mollifier_tv",
                                               head.tv_ratio * p.data.tv_bound,
                                               p.data.tv_bound, 1e-8,
                                               "||(u0eps)_x||_L1 <= TV(u0)"));
        reports.push_back(EstimateReport::make(
            "mollifier_laplacian", c_min > 0.0 ? c_max / c_min - 1.0 : 0.0, 0.10, 0.0,
            "eps*||(u0eps)_xx||_L1/TV(u0) stable under eps-halving"));
        write_bv_aggregate_csv({{sc.epsilon, bv_aggregate_info(res, p.data)}},
                               (dir / "bv_aggregate_info.csv").string());
    } else {
        const double lhs = sc.epsilon * grad_l2_sq_spacetime(res.solution);
        const double rhs =
            p.domain.volume() * p.data.a_bound * p.data.a_bound / (2.0 * p.visc.r_lower);
        reports.push_back(EstimateReport::make("energy", lhs, rhs, tol_energy,
                                               "eps*||u_x||^2_L2(QT) <= Vol A^2/(2r)"));
        // single-run gradient bound: measured on this run
        reports.push_back(bv_time_report_f(res, p.flux, p.visc, p.data,
                                           space_bv_l1(res.solution), tol_bv));
        reports.push_back(EstimateReport::make("w11_sup", norm_linf(u0eps),
                                               p.data.a_bound, 1e-8,
                                               "||u0eps||_inf <= A"));
    }
    write_estimates_csv(reports, (dir / "estimates.csv").string());
    print_reports(reports);

    const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                      [](const EstimateReport& r) { return r.pass; });
    return all_pass ? kExitPass : kExitEstimateFailure;
}

int cmd_reference(const std::string& config_path, const std::string& out) {
    const auto cfg = ConfigMap::load(config_path);
    cfg.validate_keys(kConfigKeys);
    const Problem p = load_problem(cfg);
    const int n_cells = cfg.get_int("n_cells", 512);
    const int fine_factor = cfg.get_int("fine_factor", 8);
    const double T = cfg.get_real("T", 0.5);
    const double cfl = cfg.get_real("cfl_safety", 0.8);

    const auto res = godunov_reference(p.flux, p.data, n_cells * fine_factor, T, cfl,
                                       cfg.get_int("store_every", 0));
    fs::create_directories(out);
    const fs::path dir(out);
    copy_config(cfg, dir);
    write_slices_csv(res.solution, (dir / "slices.csv").string());
    write_reference_diagnostics(res, (dir / "diagnostics.csv").string());
    std::printf("reference march: %ld steps on %d cells, boundary outflux %.6g\n",
                res.steps, n_cells * fine_factor, res.outflux_right - res.outflux_left);
    return kExitPass;
}

int cmd_sweep(const std::string& config_path, const std::string& out) {
    const auto cfg = ConfigMap::load(config_path);
    cfg.validate_keys(kConfigKeys);
    const Problem p = load_problem(cfg);

    const auto hyp_report = validate_hypothesis(p.flux, p.visc, p.data);
    if (!hyp_report.all_pass()) {
        std::fprintf(stderr, "hypothesis validation failed\n");
        return kExitUsage;
    }

    SweepConfig sc;
    sc.n_cells = cfg.get_int("n_cells", 0);
    sc.T = cfg.get_real("T", 0.5);
    sc.cfl_safety = cfg.get_real("cfl_safety", 0.8);
    sc.scheme = scheme_from_string(cfg.get_string("scheme", "engquist_osher"));
    sc.store_every = cfg.get_int("store_every", 0);
    sc.fine_factor = cfg.get_int("fine_factor", 8);
    sc.tol_maxp = cfg.get_real("tol_maxp", 1e-10);
    sc.tol_energy = cfg.get_real("tol_energy", 0.05);
    sc.tol_bv = cfg.get_real("tol_bv", 0.05);

    const auto sweep = run_sweep(p.flux, p.visc, p.data, cfg.get_real_list("eps_list"), sc);

    fs::create_directories(out);
    const fs::path dir(out);
    copy_config(cfg, dir);
    write_sweep_report_csv(sweep.reports, (dir / "sweep_report.csv").string());
    write_convergence_csv(sweep, (dir / "convergence.csv").string());
    std::vector<std::pair<double, BvAggregateInfo>> agg;
    for (size_t k = 0; k < sweep.runs.size(); ++k) {
        agg.emplace_back(sweep.eps_list[k], bv_aggregate_info(sweep.runs[k], p.data));
        const fs::path sub = dir / ("eps_" + short_real(sweep.eps_list[k]));
        fs::create_directories(sub);
        write_slices_csv(sweep.runs[k].solution, (sub / "slices.csv").string());
        write_diagnostics_csv(sweep.runs[k].diagnostics, (sub / "diagnostics.csv").string());
    }
    if (p.data.hypothesis == Hypothesis::E) {
        write_bv_aggregate_csv(agg, (dir / "bv_aggregate_info.csv").string());
    }

    if (sweep.aborted) {
        std::fprintf(stderr, "sweep aborted: %s\n", sweep.abort_reason.c_str());
        return kExitEstimateFailure;
    }
    std::printf("sweep: fitted oracle rate exponent %.3f\n", sweep.fitted_rate);
    std::vector<EstimateReport> flat;
    for (const auto& row : sweep.reports) flat.push_back(row.report);
    print_reports(flat);
    return sweep.all_pass() ? kExitPass : kExitEstimateFailure;
}

int cmd_verify(const std::string& in_dir, std::string config_path,
               const std::string& report_path) {
    const fs::path dir(in_dir);
    fs::path slices = dir / "slices.csv";
    if (!fs::exists(slices)) {
        // sweep directory: use the smallest-epsilon run
        double best = 1e300;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_directory()) continue;
            const std::string name = entry.path().filename().string();
            if (name.rfind("eps_", 0) != 0) continue;
            const double eps = std::stod(name.substr(4));
            if (eps < best && fs::exists(entry.path() / "slices.csv")) {
                best = eps;
                slices = entry.path() / "slices.csv";
            }
        }
        if (!fs::exists(slices)) {
            throw std::runtime_error("verify: no slices.csv under " + in_dir);
        }
    }
    if (config_path.empty()) config_path = (dir / "config.cfg").string();
    const auto cfg = ConfigMap::load(config_path);
    cfg.validate_keys(kConfigKeys);
    const Problem p = load_problem(cfg);

    const auto stf = read_slices_csv(slices.string());
    const double T = stf.final_time();
    const double dt_mean = T / std::max(1, stf.n_slices() - 1);
    EntropyTolerances tols;
    tols.c_tol = cfg.get_real("c_tol", tols.c_tol);
    const double tol = tols.c_tol * (stf.grid.h + dt_mean);

    EntropyReport rep;
    rep.levels = kruzhkov_levels(data_interval(p.data), 9);
    const auto battery = standard_bump_battery(stf.grid.domain, T);
    rep.test_function_count = static_cast<int>(battery.size());
    rep.worst_interior_residual = -1e300;
    for (double k : rep.levels) {
        for (const auto& phi : battery) {
            EntropyRow row;
            row.kind = "interior";
            row.k = k;
            row.testfn_id = phi.id;
            row.residual = interior_residual_single(stf, p.flux, k, phi);
            row.tolerance = tol;
            row.pass = row.residual <= tol;
            rep.worst_interior_residual = std::max(rep.worst_interior_residual, row.residual);
            rep.rows.push_back(row);
        }
    }
    EntropyRow brow;
    brow.kind = "boundary";
    brow.residual = boundary_residual(stf, p.flux);
    brow.tolerance = tol;
    brow.pass = brow.residual <= tol;
    rep.worst_boundary_residual = brow.residual;
    rep.rows.push_back(brow);

    write_entropy_csv(rep, report_path);
    std::printf("entropy residuals: worst interior %.6g, worst boundary %.6g, tol %.6g\n",
                rep.worst_interior_residual, rep.worst_boundary_residual, tol);
    return rep.all_pass() ? kExitPass : kExitEstimateFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and verification harness for quasilinear viscous "
                 "approximations of scalar conservation laws"};
    app.require_subcommand(1);

    auto* prepare = app.add_subcommand("prepare", "mollify initial data and check its bounds");
    std::string hypothesis = "E", data_name = "step", out_dir = "out";
    double eps = 0.05, domain_a = 0.0, domain_b = 1.0;
    int n_cells = 512;
    prepare->add_option("--hypothesis", hypothesis, "E or F");
    prepare->add_option("--data", data_name, "catalog datum name");
    prepare->add_option("--eps", eps, "mollification scale");
    prepare->add_option("--n-cells", n_cells, "grid cells for the emitted field");
    prepare->add_option("--domain-a", domain_a, "left endpoint");
    prepare->add_option("--domain-b", domain_b, "right endpoint");
    prepare->add_option("--out", out_dir, "output directory (default: out)");

    auto* solve_cmd = app.add_subcommand("solve", "march one viscous approximation");
    std::string config_path;
    solve_cmd->add_option("--config", config_path, "config file")->required();
    solve_cmd->add_option("--out", out_dir, "output directory (default: out)");

    auto* reference = app.add_subcommand("reference", "fine-grid Godunov reference run");
    reference->add_option("--config", config_path, "config file")->required();
    reference->add_option("--out", out_dir, "output directory (default: out)");

    auto* sweep_cmd = app.add_subcommand("sweep", "epsilon sweep with all estimate reports");
    sweep_cmd->add_option("--config", config_path, "config file")->required();
    sweep_cmd->add_option("--out", out_dir, "output directory (default: out)");

    auto* verify = app.add_subcommand("verify", "entropy residuals of a stored solution");
    std::string in_dir, report_path = "entropy.csv", verify_config;
    verify->add_option("--in", in_dir, "directory with slices.csv")->required();
    verify->add_option("--config", verify_config, "config file (default: <in>/config.cfg)");
    verify->add_option("--report", report_path, "entropy report CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (prepare->parsed()) {
            return cmd_prepare(hypothesis, data_name, eps, n_cells, domain_a, domain_b,
                               out_dir);
        }
        if (solve_cmd->parsed()) return cmd_solve(config_path, out_dir);
        if (reference->parsed()) return cmd_reference(config_path, out_dir);
        if (sweep_cmd->parsed()) return cmd_sweep(config_path, out_dir);
        if (verify->parsed()) return cmd_verify(in_dir, verify_config, report_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
