#pragma once

#include "viscoflow/grid.hpp"
#include "viscoflow/models.hpp"

namespace viscoflow {

/// Self-similar entropy solution of a convex-flux Riemann problem centred at
/// x0: a shock obeying Rankine-Hugoniot and the Lax condition for uL > uR, a
/// rarefaction fan spanning [f'(uL), f'(uR)] for uL < uR.
struct RiemannSolution {
    enum class Wave { constant, shock, rarefaction };

    double u_left = 0.0;
    double u_right = 0.0;
    double x0 = 0.0;
    Wave wave = Wave::constant;
    double shock_speed = 0.0;             // Wave::shock
    double fan_lo = 0.0, fan_hi = 0.0;    // Wave::rarefaction: f'(uL), f'(uR)
    FluxModel flux;                       // kept for fan inversion

    double evaluate(double x, double t) const;
};

/// Solve the Riemann problem for a flux that is convex over the data
/// interval (checked by sampling; throws otherwise).
RiemannSolution solve_riemann(const FluxModel& flux, double uL, double uR,
                              double x0 = 0.0);

struct GodunovResult {
    SpaceTimeField solution;
    double dt_used = 0.0;
    long steps = 0;
    // Cumulative boundary flux ledger, as in the viscous solver.
    double outflux_left = 0.0;
    double outflux_right = 0.0;
};

/// First-order Godunov march of the inviscid problem on a fine grid with
/// zero Dirichlet ghost states and the Godunov flux at the boundary faces
/// (the weak boundary treatment consistent with the boundary entropy
/// condition for monotone schemes). Viscosity and flux mollification play no
/// role here: this approximates the limit problem itself.
GodunovResult godunov_reference(const FluxModel& flux, const InitialData& u0,
                                int fine_cells, double T, double cfl_safety = 0.8,
                                int store_every = 0);

}  // namespace viscoflow
