#pragma once

#include <string>
#include <vector>

#include "viscoflow/grid.hpp"
#include "viscoflow/models.hpp"
#include "viscoflow/report.hpp"

namespace viscoflow {

/// Monotone numerical flux for the advective part. engquist_osher and
/// godunov_flux assume a convex flux (every catalog flux, mollified or not,
/// is convex); lax_friedrichs uses the global Lipschitz bound and works for
/// any flux.
enum class Scheme { engquist_osher, godunov_flux, lax_friedrichs };

Scheme scheme_from_string(const std::string& s);
std::string scheme_to_string(Scheme s);

struct SolverConfig {
    double epsilon = 0.01;  // viscosity scale; also the flux mollification scale
    int n_cells = 256;
    double T = 0.5;
    double cfl_safety = 0.8;
    int store_every = 0;  // slice cadence in steps; 0 = auto (~200 slices)
    Scheme scheme = Scheme::engquist_osher;
    // Test hook: constant added to eps*B at every face. Negative values make
    // the diffusion anti-dissipative so the estimate checkers can be shown to
    // detect violations.
    double diffusion_bias = 0.0;

    void validate() const;  // throws on invalid values
};

struct StepDiagnostics {
    long step = 0;
    double t = 0.0;
    double mass = 0.0;
    double linf = 0.0;
};

struct SolveResult {
    SpaceTimeField solution;
    SolverConfig config;
    double dt_used = 0.0;
    long steps = 0;
    double max_abs = 0.0;  // over every step, not just stored slices
    std::vector<StepDiagnostics> diagnostics;
    // Cumulative boundary ledger: time-integrated total flux (advective plus
    // diffusive) through each boundary face, signed outward on the right.
    double outflux_left = 0.0;
    double outflux_right = 0.0;
    bool monotone_cfl_ok = true;   // sufficient monotonicity condition held
    bool resolution_ok = true;     // h <= eps/4 (boundary layers resolved)
    bool max_growth_detected = false;  // post-hoc CFL instability indicator
};

/// March the regularized problem
///   u_t + (f_eps(u))_x = eps * (B(u) u_x)_x,  u = 0 at both ends,
/// with an explicit conservative update: monotone numerical flux for the
/// mollified flux plus central differencing of the diffusion with B evaluated
/// at arithmetic-mean face states and zero-Dirichlet ghost cells. The time
/// step is cfl_safety * min(h/(2 Lip), h^2/(2 eps sup B)), rounded down so the
/// march lands exactly on T. Throws on NaN/overflow with the step index.
SolveResult solve(const FluxModel& flux, const ViscosityModel& visc,
                  const ScalarField& u0eps, const SolverConfig& cfg);

/// sup over stored slices of ||u(.,t)||_inf against ||u0||_inf. The default
/// tolerance is the monotone-scheme one.
EstimateReport max_principle_check(const SolveResult& result, const InitialData& u0,
                                   double tol = 1e-10);

/// eps * ||u_x||^2_{L2(QT)} (central differences + trapezoid in time) against
/// ||u0eps||^2_{L2} / (2r).
EstimateReport energy_estimate_check(const SolveResult& result,
                                     const ViscosityModel& visc,
                                     const ScalarField& u0eps, double tol = 0.05);

/// ||u_x||^2_{L2(QT)} by central differences with zero ghost values.
double grad_l2_sq_spacetime(const SpaceTimeField& stf);

}  // namespace viscoflow
