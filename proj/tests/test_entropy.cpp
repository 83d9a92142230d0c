#include <stdexcept>
#include <cmath>
#include <functional>

#include "doctest.h"
#include "viscoflow/entropy.hpp"
#include "viscoflow/mollify.hpp"
#include "viscoflow/riemann.hpp"

using namespace viscoflow;

namespace {

SpaceTimeField steady_state_field(const std::function<double(double)>& fn, int n,
                                  int slices, double T) {
    SpaceTimeField stf;
    stf.grid = Grid(Domain1D(0.0, 1.0), n);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = fn(stf.grid.cell_center(i));
    for (int k = 0; k < slices; ++k) {
        const double t = T * k / (slices - 1);
        if (k == 0) {
            stf.append_slice(0.0, vals);
        } else {
            stf.append_slice(t, vals);
        }
    }
    return stf;
}

}  // namespace

TEST_SUITE("entropy_residual") {

TEST_CASE("bump battery: 12 functions supported inside the cylinder") {
    const Domain1D dom(0.0, 1.0);
    const auto battery = standard_bump_battery(dom, 0.5);
    REQUIRE(battery.size() == 12);
    for (const auto& phi : battery) {
        CHECK(phi.supported_inside(dom, 0.5));
        CHECK(phi.value(phi.xc, phi.tc) == doctest::Approx(1.0));  // unit scale
        CHECK(phi.value(phi.xc + phi.wx, phi.tc) == 0.0);
        // derivative consistency by finite differences
        const double d = 1e-6;
        const double fd = (phi.value(phi.xc + 0.3 * phi.wx + d, phi.tc) -
                           phi.value(phi.xc + 0.3 * phi.wx - d, phi.tc)) /
                          (2 * d);
        CHECK(phi.ddx(phi.xc + 0.3 * phi.wx, phi.tc) == doctest::Approx(fd).epsilon(1e-4));
    }
}

TEST_CASE("constant solutions have vanishing interior residual") {
    // the weak form cancels exactly for constants; with the bump widths
    // resolved by ~160 cells the remaining quadrature error sits below 1e-8
    const auto stf = steady_state_field([](double) { return 0.6; }, 1024, 201, 0.5);
    const auto battery = standard_bump_battery(stf.grid.domain, 0.5);
    const auto flux = make_burgers_flux();
    for (double k : {-1.0, -0.25, 0.6, 0.9}) {
        const double r = interior_residual(stf, flux, k, battery);
        CHECK(std::abs(r) <= 1e-8);
    }
}

TEST_CASE("test function support must stay inside the cylinder") {
    const auto stf = steady_state_field([](double) { return 0.0; }, 32, 5, 0.5);
    BumpTestFunction phi;
    phi.xc = 0.1;
    phi.tc = 0.25;
    phi.wx = 0.2;  // sticks out of the left boundary
    phi.wt = 0.1;
    CHECK_THROWS_AS(interior_residual_single(stf, make_burgers_flux(), 0.0, phi),
                    std::invalid_argument);
}

TEST_CASE("Godunov shock passes the interior residual at grid scale") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    const auto flux = make_burgers_flux();
    const auto res = godunov_reference(flux, u0, 1024, 0.5);
    const auto battery = standard_bump_battery(dom, 0.5);
    const double h = res.solution.grid.h;
    const double dt = 0.5 / (res.solution.n_slices() - 1);
    const double tol = EntropyTolerances{}.c_tol * (h + dt);
    for (double k : kruzhkov_levels({-1.0, 1.0}, 9)) {
        const double r = interior_residual(res.solution, flux, k, battery);
        INFO("k = ", k, ", residual = ", r, ", tol = ", tol);
        CHECK(r <= tol);
    }
}

TEST_CASE("stationary expansion shock is detected as an entropy violation") {
    // u = -1 for x < 1/2, +1 for x > 1/2: a weak solution of the clamped
    // Burgers equation (equal fluxes) violating the entropy condition.
    const auto stf = steady_state_field(
        [](double x) { return x < 0.5 ? -1.0 : 1.0; }, 256, 201, 0.5);
    const auto battery = standard_bump_battery(stf.grid.domain, 0.5);
    const double r = interior_residual(stf, make_burgers_flux(), 0.0, battery);
    CHECK(r >= 0.1);
}

TEST_CASE("out-of-range levels reduce to the conservation-form residual") {
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    const auto flux = make_burgers_flux();
    const auto res = godunov_reference(flux, u0, 512, 0.5);
    const auto& stf = res.solution;
    const double m = 1.0;  // ||u||_inf
    const auto battery = standard_bump_battery(dom, 0.5);
    for (const auto& phi : battery) {
        const double r_hi = interior_residual_single(stf, flux, 2.0 * m, phi);
        const double r_lo = interior_residual_single(stf, flux, -2.0 * m, phi);
        // conservation-form weak residual and the quadrature zero-sums of
        // phi_t and phi_x, all with the same discrete measure
        double cons = 0.0, sum_t = 0.0, sum_x = 0.0;
        for (int k = 0; k < stf.n_slices(); ++k) {
            const double t = stf.times[k];
            const double tp = k > 0 ? stf.times[k - 1] : t;
            const double tn = k + 1 < stf.n_slices() ? stf.times[k + 1] : t;
            const double wt = 0.5 * (tn - tp) * stf.grid.h;
            for (int i = 0; i < stf.grid.n_cells; ++i) {
                const double x = stf.grid.cell_center(i);
                const double u = stf.slices[k][i];
                cons += wt * (-u * phi.ddt(x, t) - flux.f(u) * phi.ddx(x, t));
                sum_t += wt * phi.ddt(x, t);
                sum_x += wt * phi.ddx(x, t);
            }
        }
        // exact algebraic identities: |u-k| linearises for out-of-range k
        const double k_hi = 2.0 * m, k_lo = -2.0 * m;
        CHECK(r_hi == doctest::Approx(-cons - k_hi * sum_t - flux.f(k_hi) * sum_x)
                          .epsilon(1e-10)
                          .scale(1.0));
        CHECK(r_lo == doctest::Approx(cons + k_lo * sum_t + flux.f(k_lo) * sum_x)
                          .epsilon(1e-10)
                          .scale(1.0));
        // the zero-sums are pure quadrature noise, so up to that scale the
        // residual is the conservation-form residual itself
        CHECK(std::abs(sum_t) <= 1e-5);
        CHECK(std::abs(sum_x) <= 1e-5);
        CHECK(r_hi == doctest::Approx(-cons).epsilon(1e-8).scale(1e3));
        CHECK(r_lo == doctest::Approx(cons).epsilon(1e-8).scale(1e3));
    }
}

TEST_CASE("boundary residual: zero traces and admissible outflow") {
    const auto zero = steady_state_field([](double) { return 0.0; }, 64, 11, 0.5);
    CHECK(boundary_residual(zero, make_burgers_flux()) == 0.0);

    // oracle run with the shock leaving through the right wall: the outflow
    // trace is admissible at every stored time
    const Domain1D dom(0.0, 1.0);
    const auto u0 = make_step_data(dom);
    const auto res = godunov_reference(make_burgers_flux(), u0, 512, 1.2);
    const double r = boundary_residual(res.solution, make_burgers_flux());
    CHECK(r <= 1e-12);
}

TEST_CASE("constructed inflow trace violates the boundary inequality") {
    // gamma_u = +1 at the left wall against zero boundary data: for the
    // Burgers flux and k = 1/2 the violation size is f(1) - f(1/2) = 0.375.
    const auto stf = steady_state_field([](double) { return 1.0; }, 64, 11, 0.5);
    const double r = boundary_residual(stf, make_burgers_flux(), 9);
    CHECK(r >= 0.374);
    CHECK(r == doctest::Approx(0.5).epsilon(1e-12));  // worst level is k = 0
}

TEST_CASE("certify_limit on a hand-built Cauchy sweep of constants") {
    SweepResult sweep;
    sweep.eps_list = {0.04, 0.02, 0.01};
    for (int j = 0; j < 3; ++j) {
        SolveResult run;
        run.solution = steady_state_field([](double) { return 0.0; }, 1024, 401, 0.5);
        sweep.runs.push_back(run);
    }
    sweep.cauchy_l1 = {0.0, 0.0};
    const auto rep = certify_limit(sweep, make_burgers_flux(), {-1.0, 1.0});
    CHECK(rep.levels.size() == 9);
    CHECK(rep.test_function_count == 12);
    CHECK(rep.rows.size() == 9 * 12 + 1);
    CHECK(rep.all_pass());
    CHECK(std::abs(rep.worst_interior_residual) <= 1e-8);
    CHECK(rep.worst_boundary_residual == 0.0);

    // non-Cauchy sweep: growing differences cannot be certified
    sweep.cauchy_l1 = {0.1, 0.2};
    CHECK_THROWS_AS(certify_limit(sweep, make_burgers_flux(), {-1.0, 1.0}),
                    std::runtime_error);
    sweep.runs.resize(2);
    CHECK_THROWS_AS(certify_limit(sweep, make_burgers_flux(), {-1.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("kruzhkov levels span the interval") {
    const auto ks = kruzhkov_levels({-1.0, 1.0}, 9);
    REQUIRE(ks.size() == 9);
    CHECK(ks.front() == -1.0);
    CHECK(ks.back() == 1.0);
    CHECK(ks[4] == doctest::Approx(0.0));
}

}  // TEST_SUITE
