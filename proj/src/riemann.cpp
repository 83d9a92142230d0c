#include "viscoflow/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace viscoflow {

namespace {

void check_convex(const FluxModel& flux, double lo, double hi) {
    if (lo == hi) return;
    const int n = 1001;
    double prev = flux.f_prime(lo);
    for (int i = 1; i < n; ++i) {
        const double y = lo + (hi - lo) * i / (n - 1);
        const double fp = flux.f_prime(y);
        if (fp < prev - 1e-9 * (1.0 + std::abs(prev))) {
            throw std::invalid_argument(
                "solve_riemann: flux not convex over the data interval");
        }
        prev = fp;
    }
}

// Invert f' on [ulo, uhi] for a convex flux by bisection.
double invert_fprime(const FluxModel& flux, double ulo, double uhi, double xi) {
    double a = ulo, b = uhi;
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (flux.f_prime(m) < xi) {
            a = m;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double RiemannSolution::evaluate(double x, double t) const {
    const double dx = x - x0;
    switch (wave) {
        case Wave::constant:
            return u_left;
        case Wave::shock:
            if (t <= 0.0) return dx < 0.0 ? u_left : u_right;
            return dx < shock_speed * t ? u_left : u_right;
        case Wave::rarefaction: {
            if (t <= 0.0) return dx < 0.0 ? u_left : u_right;
            const double xi = dx / t;
            if (xi <= fan_lo) return u_left;
            if (xi >= fan_hi) return u_right;
            return invert_fprime(flux, u_left, u_right, xi);
        }
    }
    return 0.0;
}

RiemannSolution solve_riemann(const FluxModel& flux, double uL, double uR, double x0) {
    check_convex(flux, std::min(uL, uR), std::max(uL, uR));
    RiemannSolution sol;
    sol.u_left = uL;
    sol.u_right = uR;
    sol.x0 = x0;
    sol.flux = flux;
    if (uL == uR) {
        sol.wave = RiemannSolution::Wave::constant;
    } else if (uL > uR) {
        sol.wave = RiemannSolution::Wave::shock;
        sol.shock_speed = (flux.f(uL) - flux.f(uR)) / (uL - uR);
    } else {
        sol.wave = RiemannSolution::Wave::rarefaction;
        sol.fan_lo = flux.f_prime(uL);
        sol.fan_hi = flux.f_prime(uR);
    }
    return sol;
}

namespace {

// Godunov flux for a convex flux: minimum over [a, b] when a <= b (attained
// at the sonic state if interior), maximum of the endpoint values otherwise.
struct GodunovFlux {
    const FluxModel& f;
    double sonic;
    double operator()(double a, double b) const {
        if (a <= b) return f.f(std::clamp(sonic, a, b));
        return std::max(f.f(a), f.f(b));
    }
};

double find_sonic(const FluxModel& flux, double lo, double hi) {
    if (flux.f_prime(lo) >= 0.0) return lo;
    if (flux.f_prime(hi) <= 0.0) return hi;
    double a = lo, b = hi;
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (flux.f_prime(m) < 0.0) {
            a = m;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

GodunovResult godunov_reference(const FluxModel& flux, const InitialData& u0,
                                int fine_cells, double T, double cfl_safety,
                                int store_every) {
    if (fine_cells < 2) throw std::invalid_argument("godunov_reference: fine_cells >= 2");
    if (!(T > 0.0)) throw std::invalid_argument("godunov_reference: T must be > 0");
    if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) {
        throw std::invalid_argument("godunov_reference: CFL violation");
    }
    const Grid grid(u0.domain, fine_cells);
    const double h = grid.h;
    ScalarField init = cell_average_function(grid, u0.evaluate, u0.kinks);

    const double span = std::max({norm_linf(init), u0.linf_bound, 1.0}) + 1.0;
    GodunovFlux numflux{flux, find_sonic(flux, -span, span)};

    const double lip = flux.lipschitz_bound;
    const double dt_max = lip > 0.0 ? cfl_safety * h / (2.0 * lip) : T;
    const long steps = std::max<long>(1, static_cast<long>(std::ceil(T / dt_max)));
    const double dt = T / static_cast<double>(steps);
    const long cadence = store_every > 0 ? store_every : std::max<long>(1, steps / 200);

    GodunovResult res;
    res.dt_used = dt;
    res.steps = steps;
    res.solution.grid = grid;

    std::vector<double> u = init.values;
    std::vector<double> face(u.size() + 1);
    res.solution.append_slice(0.0, u);

    const int n = fine_cells;
    for (long m = 1; m <= steps; ++m) {
        for (int i = 0; i <= n; ++i) {
            const double ul = i > 0 ? u[i - 1] : 0.0;
            const double ur = i < n ? u[i] : 0.0;
            face[i] = numflux(ul, ur);
        }
        for (int i = 0; i < n; ++i) u[i] -= dt / h * (face[i + 1] - face[i]);
        res.outflux_left += dt * face[0];
        res.outflux_right += dt * face[n];
        if (m % cadence == 0 || m == steps) {
            res.solution.append_slice(m == steps ? T : m * dt, u);
        }
    }
    res.solution.validate();
    return res;
}

}  // namespace viscoflow
