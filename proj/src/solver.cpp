#include "viscoflow/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "viscoflow/mollify.hpp"

namespace viscoflow {

Scheme scheme_from_string(const std::string& s) {
    if (s == "engquist_osher") return Scheme::engquist_osher;
    if (s == "godunov_flux") return Scheme::godunov_flux;
    if (s == "lax_friedrichs") return Scheme::lax_friedrichs;
    throw std::invalid_argument("unknown scheme: " + s);
}

std::string scheme_to_string(Scheme s) {
    switch (s) {
        case Scheme::engquist_osher: return "engquist_osher";
        case Scheme::godunov_flux: return "godunov_flux";
        case Scheme::lax_friedrichs: return "lax_friedrichs";
    }
    return "?";
}

void SolverConfig::validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("SolverConfig: epsilon must be > 0");
    if (n_cells < 2) throw std::invalid_argument("SolverConfig: n_cells must be >= 2");
    if (!(T > 0.0)) throw std::invalid_argument("SolverConfig: T must be > 0");
    if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) {
        throw std::invalid_argument("SolverConfig: cfl_safety must lie in (0, 1]");
    }
    if (store_every < 0) throw std::invalid_argument("SolverConfig: store_every must be >= 0");
}

namespace {

// Piecewise-linear table of the mollified flux. Linear interpolation of a
// convex function stays convex and keeps every chord slope within the
// Lipschitz bound, so the monotone flux formulas below remain valid.
struct FluxTable {
    double lo = 0.0, hi = 0.0, dx = 0.0;
    std::vector<double> vals;
    double slope_lo = 0.0, slope_hi = 0.0;
    double sonic = 0.0;    // argmin node (convex flux)
    double f_sonic = 0.0;

    double eval(double y) const {
        if (y <= lo) return vals.front() + slope_lo * (y - lo);
        if (y >= hi) return vals.back() + slope_hi * (y - hi);
        const double s = (y - lo) / dx;
        size_t j = static_cast<size_t>(s);
        if (j + 1 >= vals.size()) j = vals.size() - 2;
        const double w = s - static_cast<double>(j);
        return vals[j] * (1.0 - w) + vals[j + 1] * w;
    }
};

FluxTable tabulate_flux(const FluxModel& f, double radius, int n_intervals) {
    FluxTable t;
    t.lo = -radius;
    t.hi = radius;
    t.dx = 2.0 * radius / n_intervals;
    t.vals.resize(n_intervals + 1);
    size_t min_idx = 0;
    for (int j = 0; j <= n_intervals; ++j) {
        t.vals[j] = f.f(t.lo + j * t.dx);
        if (t.vals[j] < t.vals[min_idx]) min_idx = j;
    }
    t.slope_lo = f.f_prime(t.lo);
    t.slope_hi = f.f_prime(t.hi);
    t.sonic = t.lo + min_idx * t.dx;
    t.f_sonic = t.vals[min_idx];
    return t;
}

struct NumericalFlux {
    Scheme scheme;
    FluxTable tab;
    double alpha = 0.0;  // global Lipschitz bound, for lax_friedrichs

    double operator()(double a, double b) const {
        switch (scheme) {
            case Scheme::lax_friedrichs:
                return 0.5 * (tab.eval(a) + tab.eval(b)) - 0.5 * alpha * (b - a);
            case Scheme::engquist_osher:
                return tab.eval(std::max(a, tab.sonic)) +
                       tab.eval(std::min(b, tab.sonic)) - tab.f_sonic;
            case Scheme::godunov_flux:
                if (a <= b) {
                    return tab.eval(std::clamp(tab.sonic, a, b));
                }
                return std::max(tab.eval(a), tab.eval(b));
        }
        return 0.0;
    }
};

}  // namespace

SolveResult solve(const FluxModel& flux, const ViscosityModel& visc,
                  const ScalarField& u0eps, const SolverConfig& cfg) {
    cfg.validate();
    if (u0eps.size() != cfg.n_cells) {
        throw std::invalid_argument("solve: u0eps is not on the configured grid");
    }
    if (!u0eps.all_finite()) throw std::invalid_argument("solve: non-finite initial data");

    const Grid grid = u0eps.grid;
    const double h = grid.h;
    const double eps = cfg.epsilon;
    const double u0_linf = norm_linf(u0eps);

    // The solver always consumes the mollified flux; for affine or zero
    // fluxes the mollification is the identity.
    const FluxModel f_eps = mollify_flux(flux, eps);
    NumericalFlux numflux;
    numflux.scheme = cfg.scheme;
    numflux.alpha = f_eps.lipschitz_bound;
    numflux.tab = tabulate_flux(f_eps, std::max(u0_linf, 1.0) + 1.0, 1 << 16);

    const double lip = flux.lipschitz_bound;
    const double diff_max = eps * visc.B_sup + std::max(cfg.diffusion_bias, 0.0);
    const double inf = std::numeric_limits<double>::infinity();
    const double dt_adv = lip > 0.0 ? h / (2.0 * lip) : inf;
    const double dt_diff = diff_max > 0.0 ? h * h / (2.0 * diff_max) : inf;
    const double dt_max = cfg.cfl_safety * std::min(dt_adv, dt_diff);
    const long steps = std::isfinite(dt_max)
                           ? std::max<long>(1, static_cast<long>(std::ceil(cfg.T / dt_max)))
                           : 1;
    const double dt = cfg.T / static_cast<double>(steps);
    const int store_every =
        cfg.store_every > 0 ? cfg.store_every
                            : std::max<long>(1, steps / 200);

    SolveResult res;
    res.config = cfg;
    res.dt_used = dt;
    res.steps = steps;
    res.solution.grid = grid;
    res.resolution_ok = h <= eps / 4.0 + 1e-15;
    // Sufficient monotonicity: nonnegative face diffusivities (B >= r) and
    // the combined advective/diffusive load below one.
    res.monotone_cfl_ok =
        eps * visc.r_lower + cfg.diffusion_bias >= 0.0 &&
        2.0 * lip * dt / h + 2.0 * diff_max * dt / (h * h) <= 1.0 + 1e-12;

    std::vector<double> u = u0eps.values;
    std::vector<double> unew(u.size());
    std::vector<double> face_flux(u.size() + 1);  // advective + diffusive total

    auto mass_of = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return h * s;
    };
    auto linf_of = [&](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    };

    res.max_abs = u0_linf;
    res.solution.append_slice(0.0, u);
    res.diagnostics.push_back({0, 0.0, mass_of(u), u0_linf});

    const int n = cfg.n_cells;
    for (long m = 1; m <= steps; ++m) {
        // Total flux through every face, zero-Dirichlet ghost states.
        for (int i = 0; i <= n; ++i) {
            const double ul = i > 0 ? u[i - 1] : 0.0;
            const double ur = i < n ? u[i] : 0.0;
            const double d_face = eps * visc.B(0.5 * (ul + ur)) + cfg.diffusion_bias;
            face_flux[i] = numflux(ul, ur) - d_face * (ur - ul) / h;
        }
        for (int i = 0; i < n; ++i) {
            unew[i] = u[i] - dt / h * (face_flux[i + 1] - face_flux[i]);
        }
        res.outflux_left += dt * face_flux[0];
        res.outflux_right += dt * face_flux[n];
        u.swap(unew);

        const double step_linf = linf_of(u);
        if (!std::isfinite(step_linf) || step_linf > 1e6 * (u0_linf + 1.0)) {
            throw std::runtime_error("solve: NaN/overflow abort at step " +
                                     std::to_string(m));
        }
        res.max_abs = std::max(res.max_abs, step_linf);
        if (step_linf > u0_linf * (1.0 + 1e-6)) res.max_growth_detected = true;

        if (m % store_every == 0 || m == steps) {
            const double t = m == steps ? cfg.T : m * dt;
            res.solution.append_slice(t, u);
            res.diagnostics.push_back({m, t, mass_of(u), step_linf});
        }
    }
    res.solution.validate();
    return res;
}

double grad_l2_sq_spacetime(const SpaceTimeField& stf) {
    const double h = stf.grid.h;
    return integrate_time(stf, [h](const ScalarField& f) {
        const auto& v = f.values;
        const int n = f.size();
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ul = i > 0 ? v[i - 1] : 0.0;
            const double ur = i + 1 < n ? v[i + 1] : 0.0;
            const double g = (ur - ul) / (2.0 * h);
            s += g * g;
        }
        return h * s;
    });
}

EstimateReport max_principle_check(const SolveResult& result, const InitialData& u0,
                                   double tol) {
    double sup = 0.0;
    for (int k = 0; k < result.solution.n_slices(); ++k) {
        sup = std::max(sup, norm_linf(result.solution.slice_field(k)));
    }
    return EstimateReport::make("max_principle", sup, u0.linf_bound, tol,
                                "sup_t ||u(.,t)||_inf <= ||u0||_inf");
}

EstimateReport energy_estimate_check(const SolveResult& result,
                                     const ViscosityModel& visc,
                                     const ScalarField& u0eps, double tol) {
    const double lhs = result.config.epsilon * grad_l2_sq_spacetime(result.solution);
    const double rhs = norm_l2_sq(u0eps) / (2.0 * visc.r_lower);
    return EstimateReport::make("energy", lhs, rhs, tol,
                                "eps*||u_x||^2_L2(QT) <= ||u0eps||^2_L2/(2r)");
}

}  // namespace viscoflow
