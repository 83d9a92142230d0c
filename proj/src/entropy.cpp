#include "viscoflow/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "viscoflow/bv.hpp"

namespace viscoflow {

namespace {

// Unit bump: exp(1 - 1/(1-s^2)) on (-1, 1), amplitude 1 at s = 0.
double bump(double s) {
    const double d = 1.0 - s * s;
    return d > 0.0 ? std::exp(1.0 - 1.0 / d) : 0.0;
}

double bump_d1(double s) {
    const double d = 1.0 - s * s;
    if (d <= 0.0) return 0.0;
    return bump(s) * (-2.0 * s / (d * d));
}

}  // namespace

double BumpTestFunction::value(double x, double t) const {
    return bump((x - xc) / wx) * bump((t - tc) / wt);
}

double BumpTestFunction::ddx(double x, double t) const {
    return bump_d1((x - xc) / wx) / wx * bump((t - tc) / wt);
}

double BumpTestFunction::ddt(double x, double t) const {
    return bump((x - xc) / wx) * bump_d1((t - tc) / wt) / wt;
}

bool BumpTestFunction::supported_inside(const Domain1D& domain, double T) const {
    return xc - wx >= domain.a && xc + wx <= domain.b && tc - wt >= 0.0 &&
           tc + wt <= T;
}

std::vector<BumpTestFunction> standard_bump_battery(const Domain1D& domain, double T) {
    // Relative (xc, tc, wx, wt); centres sweep the domain, scales vary, and
    // three bumps share the midpoint so constructed mid-domain violations hit
    // them head on.
    static constexpr double rel[12][4] = {
        {0.35, 0.5, 0.10, 0.30}, {0.50, 0.5, 0.10, 0.30}, {0.65, 0.5, 0.10, 0.30},
        {0.80, 0.5, 0.10, 0.30}, {0.35, 0.3, 0.15, 0.25}, {0.50, 0.3, 0.15, 0.25},
        {0.65, 0.3, 0.15, 0.25}, {0.80, 0.7, 0.15, 0.25}, {0.30, 0.7, 0.20, 0.20},
        {0.50, 0.7, 0.20, 0.20}, {0.70, 0.3, 0.20, 0.20}, {0.90, 0.5, 0.08, 0.40},
    };
    const double L = domain.volume();
    std::vector<BumpTestFunction> battery;
    battery.reserve(12);
    for (int i = 0; i < 12; ++i) {
        BumpTestFunction b;
        b.id = i;
        b.xc = domain.a + rel[i][0] * L;
        b.tc = rel[i][1] * T;
        b.wx = rel[i][2] * L;
        b.wt = rel[i][3] * T;
        battery.push_back(b);
    }
    return battery;
}

double interior_residual_single(const SpaceTimeField& stf, const FluxModel& flux,
                                double k, const BumpTestFunction& phi) {
    const Grid& grid = stf.grid;
    const double T = stf.final_time();
    if (!phi.supported_inside(grid.domain, T)) {
        throw std::invalid_argument(
            "interior_residual: test function support exceeds the cylinder");
    }
    const double fk = flux.f(k);
    const int m_count = stf.n_slices();

    // Clip the loops to the bump support; the integrand vanishes outside.
    int i_lo = std::max(0, static_cast<int>((phi.xc - phi.wx - grid.domain.a) / grid.h) - 1);
    int i_hi = std::min(grid.n_cells - 1,
                        static_cast<int>((phi.xc + phi.wx - grid.domain.a) / grid.h) + 1);

    double total = 0.0;
    for (int m = 0; m < m_count; ++m) {
        const double t = stf.times[m];
        if (t < phi.tc - phi.wt || t > phi.tc + phi.wt) continue;
        const double t_prev = m > 0 ? stf.times[m - 1] : stf.times[m];
        const double t_next = m + 1 < m_count ? stf.times[m + 1] : stf.times[m];
        const double w_t = 0.5 * (t_next - t_prev);
        const auto& slice = stf.slices[m];
        double s = 0.0;
        for (int i = i_lo; i <= i_hi; ++i) {
            const double x = grid.cell_center(i);
            const double u = slice[i];
            const double eta = std::abs(u - k);
            const double q = sg_eval(u - k) * (flux.f(u) - fk);
            s += -eta * phi.ddt(x, t) - q * phi.ddx(x, t);
        }
        total += w_t * grid.h * s;
    }
    return total;
}

double interior_residual(const SpaceTimeField& stf, const FluxModel& flux, double k,
                         const std::vector<BumpTestFunction>& battery) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& phi : battery) {
        worst = std::max(worst, interior_residual_single(stf, flux, k, phi));
    }
    return worst;
}

double boundary_residual(const SpaceTimeField& stf, const FluxModel& flux,
                         int levels) {
    if (levels < 2) throw std::invalid_argument("boundary_residual: levels >= 2");
    double worst = 0.0;
    const int n = stf.grid.n_cells;
    for (int m = 0; m < stf.n_slices(); ++m) {
        const auto& slice = stf.slices[m];
        // (trace, outward normal) at the two boundary points.
        const double traces[2] = {slice[0], slice[n - 1]};
        const double normals[2] = {-1.0, 1.0};
        for (int bidx = 0; bidx < 2; ++bidx) {
            const double gu = traces[bidx];
            const double sgu = sg_eval(gu);
            if (sgu == 0.0) continue;
            const double fgu = flux.f(gu);
            for (int j = 0; j < levels; ++j) {
                const double k = gu * j / (levels - 1.0);
                const double val = -sgu * (fgu - flux.f(k)) * normals[bidx];
                worst = std::max(worst, val);
            }
        }
    }
    return worst;
}

std::vector<double> kruzhkov_levels(Interval I, int count) {
    if (count < 2) throw std::invalid_argument("kruzhkov_levels: count >= 2");
    std::vector<double> ks(count);
    for (int i = 0; i < count; ++i) {
        ks[i] = I.lo + (I.hi - I.lo) * i / (count - 1);
    }
    return ks;
}

bool EntropyReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const EntropyRow& r) { return r.pass; });
}

EntropyReport certify_limit(const SweepResult& sweep, const FluxModel& flux,
                            Interval I, const EntropyTolerances& tols) {
    if (sweep.runs.size() < 3) {
        throw std::invalid_argument("certify_limit: need a sweep with >= 3 levels");
    }
    for (size_t k = 0; k + 1 < sweep.cauchy_l1.size(); ++k) {
        const double c0 = sweep.cauchy_l1[k], c1 = sweep.cauchy_l1[k + 1];
        const bool cauchy_ok = (c0 == 0.0 && c1 == 0.0) || (c0 > 0.0 && c1 < c0);
        if (!cauchy_ok) {
            throw std::runtime_error("certify_limit: no convergent limit to certify");
        }
    }

    const SpaceTimeField& stf = sweep.runs.back().solution;
    const double T = stf.final_time();
    const double dt_mean = T / std::max(1, stf.n_slices() - 1);
    const double tol = tols.c_tol * (stf.grid.h + dt_mean);

    EntropyReport rep;
    rep.levels = kruzhkov_levels(I, 9);
    const auto battery = standard_bump_battery(stf.grid.domain, T);
    rep.test_function_count = static_cast<int>(battery.size());

    rep.worst_interior_residual = -std::numeric_limits<double>::infinity();
    for (double k : rep.levels) {
        for (const auto& phi : battery) {
            EntropyRow row;
            row.kind = "interior";
            row.k = k;
            row.testfn_id = phi.id;
            row.residual = interior_residual_single(stf, flux, k, phi);
            row.tolerance = tol;
            row.pass = row.residual <= tol;
            rep.worst_interior_residual =
                std::max(rep.worst_interior_residual, row.residual);
            rep.rows.push_back(row);
        }
    }

    EntropyRow brow;
    brow.kind = "boundary";
    brow.k = 0.0;
    brow.residual = boundary_residual(stf, flux);
    brow.tolerance = tol;
    brow.pass = brow.residual <= tol;
    rep.worst_boundary_residual = brow.residual;
    rep.rows.push_back(brow);
    return rep;
}

}  // namespace viscoflow
