"""Smoke tests for the python bindings: a thin pass over each exposed surface."""

import math

import pytest

vf = pytest.importorskip("viscoflow")


@pytest.fixture(scope="module")
def domain():
    return vf.Domain1D(0.0, 1.0)


def test_norms_and_tv(domain):
    grid = vf.Grid(domain, 4)
    field = vf.ScalarField(grid, [0.0, 1.0, 1.0, 0.0])
    assert vf.norm_l1(field) == pytest.approx(0.5)
    assert vf.norm_linf(field) == 1.0
    assert vf.total_variation(field) == pytest.approx(2.0)


def test_sg_family():
    assert vf.sg_n_eval(4, 0.1) == pytest.approx(0.4)
    assert vf.sg_eval(0.0) == 0.0
    assert vf.sg_eval(-7.0) == -1.0
    assert vf.sg_n_eval(10, 0.5) == 1.0


def test_catalog_and_validation(domain):
    flux = vf.flux_by_name("burgers")
    visc = vf.viscosity_by_name("rational")
    data = vf.data_by_name("step", domain)
    assert flux.f(2.0) == pytest.approx(1.5)  # clamped tangent extension
    assert visc.B(0.0) == pytest.approx(2.0)
    report = vf.validate_hypothesis(flux, visc, data)
    assert report.all_pass()
    assert vf.data_interval(data) == (-1.0, 1.0)


def test_mollifier_bounds(domain):
    data = vf.data_by_name("step", domain)
    grid = vf.Grid(domain, 256)
    field = vf.mollify_data(data, 0.05, grid)
    assert vf.norm_linf(field) <= 1.0 + 1e-12
    assert vf.total_variation(field) <= 2.0 + 1e-9
    rep = vf.verify_mollifier_bounds(data, [0.05, 0.025])
    for row in rep.rows:
        assert row.sup_ratio <= 1.0 + 1e-8
        assert row.tv_ratio <= 1.0 + 1e-8


def test_solve_and_estimates(domain):
    data = vf.data_by_name("step", domain)
    grid = vf.Grid(domain, 128)
    u0eps = vf.mollify_data(data, 0.05, grid)
    cfg = vf.SolverConfig()
    cfg.epsilon = 0.05
    cfg.n_cells = 128
    cfg.T = 0.1
    res = vf.solve(vf.flux_by_name("burgers"), vf.viscosity_by_name("rational"),
                   u0eps, cfg)
    assert res.steps > 0
    assert res.max_abs <= 1.0 + 1e-10
    assert vf.max_principle_check(res, data).pass_
    assert vf.energy_estimate_check(res, vf.viscosity_by_name("rational"), u0eps).pass_
    assert vf.bv_space_report(res, data).pass_
    # mass accounting closes through the boundary ledger
    mass0 = res.diagnostics[0].mass
    mass1 = res.diagnostics[-1].mass
    assert mass1 - mass0 + res.outflux_right - res.outflux_left == pytest.approx(
        0.0, abs=1e-10)


def test_riemann_and_reference(domain):
    flux = vf.flux_by_name("burgers")
    shock = vf.solve_riemann(flux, 1.0, 0.0)
    assert shock.is_shock()
    assert shock.shock_speed == pytest.approx(0.5)
    fan = vf.solve_riemann(flux, -1.0, 1.0)
    assert fan.is_rarefaction()
    assert fan.evaluate(0.25, 0.5) == pytest.approx(0.5, abs=1e-9)

    data = vf.data_by_name("step", domain)
    ref = vf.godunov_reference(flux, data, 256, 0.25)
    assert ref.solution.n_slices() >= 2
    assert vf.norm_linf(ref.solution.slice_field(ref.solution.n_slices() - 1)) <= 1.0 + 1e-12


def test_entropy_residuals(domain):
    flux = vf.flux_by_name("burgers")
    data = vf.data_by_name("step", domain)
    ref = vf.godunov_reference(flux, data, 512, 0.5)
    battery = vf.standard_bump_battery(domain, 0.5)
    assert len(battery) == 12
    r = vf.interior_residual(ref.solution, flux, 0.5, battery)
    h = ref.solution.grid.h
    dt = 0.5 / (ref.solution.n_slices() - 1)
    assert r <= 12.0 * (h + dt)
    assert vf.boundary_residual(ref.solution, flux) <= 1e-9


def test_small_sweep(domain):
    data = vf.data_by_name("step", domain)
    cfg = vf.SweepConfig()
    cfg.T = 0.1
    cfg.n_cells = 128
    cfg.fine_factor = 4
    sweep = vf.run_sweep(vf.flux_by_name("burgers"), vf.viscosity_by_name("rational"),
                         data, [0.08, 0.04, 0.02], cfg)
    assert not sweep.aborted
    assert sweep.all_pass()
    assert sweep.cauchy_l1[1] < sweep.cauchy_l1[0]
    names = {row.report.name for row in sweep.reports}
    assert "max_principle" in names and "mollifier_tv" in names
