#include "viscoflow/mollify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "viscoflow/quadrature.hpp"

namespace viscoflow {

namespace {

double unit_profile(double s) {
    const double d = 1.0 - s * s;
    return d > 0.0 ? std::exp(-1.0 / d) : 0.0;
}

double unit_profile_d1(double s) {
    const double d = 1.0 - s * s;
    if (d <= 0.0) return 0.0;
    return unit_profile(s) * (-2.0 * s / (d * d));
}

double unit_profile_d2(double s) {
    const double d = 1.0 - s * s;
    if (d <= 0.0) return 0.0;
    const double g = -2.0 * s / (d * d);
    const double gp = -2.0 / (d * d) - 8.0 * s * s / (d * d * d);
    return unit_profile(s) * (g * g + gp);
}

// Panels of the kernel support. The bump is flat-but-not-analytic at the
// endpoints; a fixed subdivision keeps the per-panel Gauss rule at full
// accuracy (~1e-13) instead of ~1e-7 over the whole support.
std::vector<double> kernel_panels(double eps) {
    return {-0.75 * eps, -0.5 * eps, 0.0, 0.5 * eps, 0.75 * eps};
}

// Quadrature of kernelfn(y) * u0(x - y) over the kernel support, split at the
// fixed kernel panels and where u0(x - y) has a kink.
double convolve_at(const InitialData& u0, double eps, double x,
                   const std::function<double(double)>& kernelfn) {
    std::vector<double> breaks = kernel_panels(eps);
    for (double kx : u0.kinks) {
        const double y = x - kx;
        if (y > -eps && y < eps) breaks.push_back(y);
    }
    // Also split where the zero extension starts, if inside the window.
    for (double kx : {u0.domain.a, u0.domain.b}) {
        const double y = x - kx;
        if (y > -eps && y < eps) breaks.push_back(y);
    }
    auto integrand = [&](double y) { return kernelfn(y) * u0.evaluate(x - y); };
    return gauss_integrate_subdivided(integrand, -eps, eps, breaks, 24);
}

}  // namespace

double MollifierKernel::unit_profile_mass() {
    static const double mass = adaptive_simpson(unit_profile, -1.0, 1.0, 1e-15, 48);
    return mass;
}

MollifierKernel::MollifierKernel(double eps) : eps_(eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("MollifierKernel: eps must be > 0");
    k_ = 1.0 / unit_profile_mass();
}

double MollifierKernel::value(double x) const {
    return k_ / eps_ * unit_profile(x / eps_);
}

double MollifierKernel::deriv(double x) const {
    return k_ / (eps_ * eps_) * unit_profile_d1(x / eps_);
}

double MollifierKernel::second_deriv(double x) const {
    return k_ / (eps_ * eps_ * eps_) * unit_profile_d2(x / eps_);
}

double mollified_value(const InitialData& u0, const MollifierKernel& kernel, double x) {
    return convolve_at(u0, kernel.epsilon(), x,
                       [&](double y) { return kernel.value(y); });
}

double mollified_deriv(const InitialData& u0, const MollifierKernel& kernel, double x) {
    return convolve_at(u0, kernel.epsilon(), x,
                       [&](double y) { return kernel.deriv(y); });
}

double mollified_second_deriv(const InitialData& u0, const MollifierKernel& kernel,
                              double x) {
    return convolve_at(u0, kernel.epsilon(), x,
                       [&](double y) { return kernel.second_deriv(y); });
}

namespace {

ScalarField restrict_fine_samples(const Grid& grid,
                                  const std::function<double(double)>& fn) {
    // 4x finer midpoint sampling, averaged back to cell values.
    ScalarField out(grid);
    const double hf = grid.h / 4.0;
    for (int i = 0; i < grid.n_cells; ++i) {
        double sum = 0.0;
        const double x0 = grid.left_face(i);
        for (int j = 0; j < 4; ++j) sum += fn(x0 + (j + 0.5) * hf);
        out.values[i] = 0.25 * sum;
    }
    return out;
}

}  // namespace

ScalarField mollify_data(const InitialData& u0, double eps, const Grid& grid) {
    if (u0.hypothesis != Hypothesis::E) {
        throw std::invalid_argument("mollify_data: requires Hypothesis E data");
    }
    if (!(eps > 0.0)) throw std::invalid_argument("mollify_data: eps must be > 0");
    if (!(eps < u0.support_margin)) {
        throw std::invalid_argument("mollify_data: support escapes domain (eps >= margin)");
    }
    if (!grid.same_as(Grid(u0.domain, grid.n_cells))) {
        throw std::invalid_argument("mollify_data: grid domain mismatch");
    }
    const MollifierKernel kernel(eps);
    return restrict_fine_samples(grid,
                                 [&](double x) { return mollified_value(u0, kernel, x); });
}

MollifierBoundsReport verify_mollifier_bounds(const InitialData& u0,
                                              const std::vector<double>& eps_list) {
    if (u0.hypothesis != Hypothesis::E) {
        throw std::invalid_argument("verify_mollifier_bounds: requires Hypothesis E data");
    }
    MollifierBoundsReport rep;
    const Domain1D& dom = u0.domain;
    for (double eps : eps_list) {
        if (!(eps > 0.0) || !(eps < u0.support_margin)) {
            throw std::invalid_argument("verify_mollifier_bounds: inadmissible eps");
        }
        const MollifierKernel kernel(eps);
        MollifierBoundsRow row;
        row.eps = eps;

        if (u0.linf_bound == 0.0 || u0.tv_bound == 0.0) {
            rep.rows.push_back(row);  // zero datum: every ratio is 0
            continue;
        }

        double sup = 0.0;
        const int ns = 4096;
        for (int i = 0; i < ns; ++i) {
            const double x = dom.a + dom.volume() * (i + 0.5) / ns;
            sup = std::max(sup, std::abs(mollified_value(u0, kernel, x)));
        }
        row.sup_ratio = sup / u0.linf_bound;

        // Integrands are supported within eps of the kinks; split there.
        std::vector<double> breaks;
        for (double kx : u0.kinks) {
            breaks.push_back(kx - eps);
            breaks.push_back(kx);
            breaks.push_back(kx + eps);
        }
        const double grad_l1 = adaptive_simpson_subdivided(
            [&](double x) { return std::abs(mollified_deriv(u0, kernel, x)); }, dom.a,
            dom.b, breaks, 1e-11);
        row.tv_ratio = grad_l1 / u0.tv_bound;

        const double lap_l1 = adaptive_simpson_subdivided(
            [&](double x) { return std::abs(mollified_second_deriv(u0, kernel, x)); },
            dom.a, dom.b, breaks, 1e-10);
        row.c_eps = eps * lap_l1 / u0.tv_bound;

        rep.rows.push_back(row);
    }
    for (const auto& row : rep.rows) rep.empirical_c = std::max(rep.empirical_c, row.c_eps);
    return rep;
}

namespace {

// Cutoff ramping 0 -> 1 over [a+eps, a+2eps] and mirrored at the right end.
double cutoff_value(const Domain1D& dom, double eps, double x) {
    const double dl = (x - dom.a) / eps - 1.0;
    const double dr = (dom.b - x) / eps - 1.0;
    const double wl = std::clamp(dl, 0.0, 1.0);
    const double wr = std::clamp(dr, 0.0, 1.0);
    return wl * wr;
}

std::vector<double> cutoff_kinks(const InitialData& u0, double eps) {
    std::vector<double> ks = u0.kinks;
    const Domain1D& dom = u0.domain;
    ks.push_back(dom.a + eps);
    ks.push_back(dom.a + 2 * eps);
    ks.push_back(dom.b - 2 * eps);
    ks.push_back(dom.b - eps);
    return ks;
}

double w11_convolve(const InitialData& u0, double eps, double x,
                    const std::function<double(double)>& kernelfn) {
    const double half = 0.5 * eps;
    std::vector<double> breaks = kernel_panels(half);
    for (double kx : cutoff_kinks(u0, eps)) {
        const double y = x - kx;
        if (y > -half && y < half) breaks.push_back(y);
    }
    const Domain1D& dom = u0.domain;
    auto integrand = [&](double y) {
        const double z = x - y;
        return kernelfn(y) * cutoff_value(dom, eps, z) * u0.evaluate(z);
    };
    return gauss_integrate_subdivided(integrand, -half, half, breaks, 24);
}

}  // namespace

double w11_approx_value(const InitialData& u0, double eps, double x) {
    const MollifierKernel kernel(0.5 * eps);
    return w11_convolve(u0, eps, x, [&](double y) { return kernel.value(y); });
}

double w11_approx_deriv(const InitialData& u0, double eps, double x) {
    const MollifierKernel kernel(0.5 * eps);
    return w11_convolve(u0, eps, x, [&](double y) { return kernel.deriv(y); });
}

ScalarField approximate_w11(const InitialData& u0, double eps, const Grid& grid) {
    if (u0.hypothesis != Hypothesis::F) {
        throw std::invalid_argument("approximate_w11: requires Hypothesis F data");
    }
    if (!(eps > 0.0)) throw std::invalid_argument("approximate_w11: eps must be > 0");
    if (!(4.0 * eps < u0.domain.volume())) {
        throw std::invalid_argument("approximate_w11: eps too large for the domain");
    }
    return restrict_fine_samples(grid,
                                 [&](double x) { return w11_approx_value(u0, eps, x); });
}

double w11_approx_error(const InitialData& u0, double eps) {
    if (!u0.evaluate_deriv) {
        throw std::invalid_argument("w11_approx_error: datum has no derivative evaluator");
    }
    const Domain1D& dom = u0.domain;
    std::vector<double> breaks;
    for (double kx : cutoff_kinks(u0, eps)) {
        breaks.push_back(kx - 0.5 * eps);
        breaks.push_back(kx);
        breaks.push_back(kx + 0.5 * eps);
    }
    const double value_err = adaptive_simpson_subdivided(
        [&](double x) { return std::abs(w11_approx_value(u0, eps, x) - u0.evaluate(x)); },
        dom.a, dom.b, breaks, 1e-9);
    const double deriv_err = adaptive_simpson_subdivided(
        [&](double x) {
            return std::abs(w11_approx_deriv(u0, eps, x) - u0.evaluate_deriv(x));
        },
        dom.a, dom.b, breaks, 1e-9);
    return value_err + deriv_err;
}

FluxModel mollify_flux(const FluxModel& flux, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("mollify_flux: eps must be > 0");
    // Fixed quadrature stencil for f * rho_eps: Gauss-16 on each of four
    // symmetric panels of the unit support.
    const auto& rule = GaussLegendre::order(16);
    std::vector<double> nodes, weights;
    const double panels[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int p = 0; p < 4; ++p) {
        const double mid = 0.5 * (panels[p] + panels[p + 1]);
        const double half = 0.5 * (panels[p + 1] - panels[p]);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            nodes.push_back(mid + half * rule.nodes[i]);
            weights.push_back(half * rule.weights[i]);
        }
    }
    const int n = static_cast<int>(nodes.size());
    // Symmetrise node pairs so affine fluxes are reproduced to rounding, then
    // normalise the weights to unit mass.
    for (int i = 0; i < n / 2; ++i) {
        const double s = 0.5 * (nodes[i] - nodes[n - 1 - i]);
        nodes[i] = s;
        nodes[n - 1 - i] = -s;
        const double w = 0.5 * (weights[i] + weights[n - 1 - i]);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    for (int i = 0; i < n; ++i) weights[i] *= unit_profile(nodes[i]);
    double mass = 0.0;
    for (double w : weights) mass += w;
    for (double& w : weights) w /= mass;
    for (double& s : nodes) s *= eps;

    auto base_f = flux.f;
    auto base_fp = flux.f_prime;
    FluxModel out;
    out.name = flux.name + "_mollified";
    out.f = [nodes, weights, base_f](double y) {
        double s = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * base_f(y - nodes[i]);
        return s;
    };
    out.f_prime = [nodes, weights, base_fp](double y) {
        double s = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * base_fp(y - nodes[i]);
        return s;
    };
    out.lipschitz_bound = flux.lipschitz_bound;
    return out;
}

}  // namespace viscoflow
