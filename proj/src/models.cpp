#include "viscoflow/models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace viscoflow {

Interval data_interval(const InitialData& data) {
    const double m = data.hypothesis == Hypothesis::E ? data.linf_bound : data.a_bound;
    return {-m, m};
}

double sampled_sup(const std::function<double(double)>& fn, double lo, double hi,
                   int n) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        const double y = lo + (hi - lo) * i / (n - 1);
        m = std::max(m, std::abs(fn(y)));
    }
    return m;
}

FluxModel clamp_flux(const FluxModel& raw, Interval I) {
    if (!(I.hi > I.lo)) throw std::invalid_argument("clamp_flux: degenerate interval");
    const double lo = I.lo, hi = I.hi;
    const double f_lo = raw.f(lo), f_hi = raw.f(hi);
    const double s_lo = raw.f_prime(lo), s_hi = raw.f_prime(hi);
    auto base_f = raw.f;
    auto base_fp = raw.f_prime;
    FluxModel out;
    out.name = raw.name + "_clamped";
    out.f = [=](double y) {
        if (y < lo) return f_lo + s_lo * (y - lo);
        if (y > hi) return f_hi + s_hi * (y - hi);
        return base_f(y);
    };
    out.f_prime = [=](double y) { return base_fp(y < lo ? lo : (y > hi ? hi : y)); };
    out.lipschitz_bound = sampled_sup(base_fp, lo, hi);
    return out;
}

bool HypothesisReport::all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const HypothesisClause& c) { return c.pass; });
}

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

HypothesisReport validate_hypothesis(const FluxModel& flux, const ViscosityModel& visc,
                                     const InitialData& data) {
    HypothesisReport rep;
    const Interval I = data_interval(data);
    const double pad = 0.1 * std::max(I.width(), 1.0);
    const double lo = I.lo - pad, hi = I.hi + pad;
    const int n = 10001;

    // Flux: finite, continuous (Lipschitz increments), declared bound dominates.
    {
        double sup_fp = 0.0;
        bool cont = true;
        double prev = flux.f(lo);
        const double dy = (hi - lo) / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double y = lo + dy * i;
            const double fy = flux.f(y);
            sup_fp = std::max(sup_fp, std::abs(flux.f_prime(y)));
            if (!std::isfinite(fy)) cont = false;
            if (i > 0 && std::abs(fy - prev) > flux.lipschitz_bound * dy * (1 + 1e-6) + 1e-12) {
                cont = false;
            }
            prev = fy;
        }
        rep.clauses.push_back({"f continuous with f' bounded", cont,
                               cont ? "sampled increments within Lipschitz bound"
                                    : "sampled continuity check failed"});
        const bool lip_ok = flux.lipschitz_bound >= sup_fp * (1 - 1e-9);
        rep.clauses.push_back({"lipschitz_bound >= sup |f'|", lip_ok,
                               "sampled sup|f'| = " + num(sup_fp) +
                                   ", declared = " + num(flux.lipschitz_bound)});
    }

    // Viscosity: B >= r > 0 and |B| <= B_sup on the sampled range.
    {
        double min_b = std::numeric_limits<double>::infinity();
        double max_b = 0.0;
        for (int i = 0; i < n; ++i) {
            const double y = lo + (hi - lo) * i / (n - 1);
            const double by = visc.B(y);
            min_b = std::min(min_b, by);
            max_b = std::max(max_b, std::abs(by));
        }
        const bool r_ok = visc.r_lower > 0 && min_b >= visc.r_lower * (1 - 1e-9);
        rep.clauses.push_back({"B >= r > 0", r_ok,
                               "sampled min B = " + num(min_b) +
                                   ", declared r = " + num(visc.r_lower)});
        const bool sup_ok = max_b <= visc.B_sup * (1 + 1e-9);
        rep.clauses.push_back({"|B| <= B_sup", sup_ok,
                               "sampled sup|B| = " + num(max_b) +
                                   ", declared = " + num(visc.B_sup)});
    }

    // Data clauses.
    const Domain1D& dom = data.domain;
    const int nd = 10001;
    double sup_u = 0.0, var_u = 0.0;
    double prev_u = data.evaluate(dom.a + (dom.b - dom.a) * 0.5 / nd);
    for (int i = 0; i < nd; ++i) {
        const double x = dom.a + (dom.b - dom.a) * (i + 0.5) / nd;
        const double u = data.evaluate(x);
        sup_u = std::max(sup_u, std::abs(u));
        if (i > 0) var_u += std::abs(u - prev_u);
        prev_u = u;
    }
    rep.clauses.push_back({"||u0||_inf consistent", sup_u <= data.linf_bound * (1 + 1e-9) + 1e-12,
                           "sampled sup = " + num(sup_u) + ", declared = " + num(data.linf_bound)});
    if (data.hypothesis == Hypothesis::E) {
        rep.clauses.push_back({"support margin positive", data.support_margin > 0,
                               "margin = " + num(data.support_margin)});
        bool zero_outside = true;
        for (int i = 0; i < 200; ++i) {
            const double d = data.support_margin * (i + 0.5) / 200.0;
            if (data.evaluate(dom.a + d) != 0.0 || data.evaluate(dom.b - d) != 0.0) {
                zero_outside = false;
            }
        }
        rep.clauses.push_back({"u0 vanishes within the support margin", zero_outside, ""});
        const double tv_sampled = var_u + std::abs(data.evaluate(dom.a + 1e-12)) +
                                  std::abs(data.evaluate(dom.b - 1e-12));
        rep.clauses.push_back({"TV(u0) consistent", tv_sampled <= data.tv_bound * (1 + 1e-6) + 1e-9,
                               "sampled = " + num(tv_sampled) + ", declared = " + num(data.tv_bound)});
    } else {
        const double ua = data.evaluate(dom.a), ub = data.evaluate(dom.b);
        rep.clauses.push_back({"boundary values zero", std::abs(ua) < 1e-9 && std::abs(ub) < 1e-9,
                               "u0(a) = " + num(ua) + ", u0(b) = " + num(ub)});
        rep.clauses.push_back({"W^{1,1} seminorm finite and consistent",
                               std::isfinite(data.w11_seminorm) &&
                                   var_u <= data.w11_seminorm * (1 + 1e-3) + 1e-9,
                               "sampled variation = " + num(var_u) +
                                   ", declared = " + num(data.w11_seminorm)});
        rep.clauses.push_back({"A bound dominates ||u0||_inf", data.a_bound >= data.linf_bound,
                               "A = " + num(data.a_bound)});
    }
    return rep;
}

FluxModel make_zero_flux() {
    FluxModel m;
    m.name = "zero";
    m.f = [](double) { return 0.0; };
    m.f_prime = [](double) { return 0.0; };
    m.lipschitz_bound = 0.0;
    return m;
}

FluxModel make_advection_flux(double c) {
    FluxModel m;
    m.name = "advection";
    m.f = [c](double y) { return c * y; };
    m.f_prime = [c](double) { return c; };
    m.lipschitz_bound = std::abs(c);
    return m;
}

FluxModel make_burgers_flux(Interval I) {
    FluxModel raw;
    raw.name = "burgers";
    raw.f = [](double y) { return 0.5 * y * y; };
    raw.f_prime = [](double y) { return y; };
    raw.lipschitz_bound = std::max(std::abs(I.lo), std::abs(I.hi));
    FluxModel m = clamp_flux(raw, I);
    m.name = "burgers";
    return m;
}

ViscosityModel make_constant_viscosity() {
    ViscosityModel m;
    m.name = "constant";
    m.B = [](double) { return 1.0; };
    m.B_prime = [](double) { return 0.0; };
    m.r_lower = 1.0;
    m.B_sup = 1.0;
    return m;
}

ViscosityModel make_rational_viscosity() {
    ViscosityModel m;
    m.name = "rational";
    m.B = [](double y) { return 1.0 + 1.0 / (1.0 + y * y); };
    m.B_prime = [](double y) {
        const double d = 1.0 + y * y;
        return -2.0 * y / (d * d);
    };
    m.r_lower = 1.0;
    m.B_sup = 2.0;
    return m;
}

InitialData make_step_data(const Domain1D& domain) {
    const double L = domain.volume();
    const double s1 = domain.a + 0.3 * L, s2 = domain.a + 0.7 * L;
    InitialData d;
    d.name = "step";
    d.hypothesis = Hypothesis::E;
    d.domain = domain;
    d.evaluate = [s1, s2](double x) { return (x >= s1 && x < s2) ? 1.0 : 0.0; };
    d.evaluate_deriv = [](double) { return 0.0; };
    d.kinks = {s1, s2};
    d.linf_bound = 1.0;
    d.tv_bound = 2.0;
    d.support_margin = 0.3 * L;
    return d;
}

InitialData make_hat_data(const Domain1D& domain) {
    const double L = domain.volume();
    const double s1 = domain.a + 0.3 * L, sm = domain.a + 0.5 * L, s2 = domain.a + 0.7 * L;
    const double slope = 1.0 / (0.2 * L);
    InitialData d;
    d.name = "hat";
    d.hypothesis = Hypothesis::E;
    d.domain = domain;
    d.evaluate = [s1, sm, s2, slope](double x) {
        if (x <= s1 || x >= s2) return 0.0;
        return x <= sm ? slope * (x - s1) : slope * (s2 - x);
    };
    d.evaluate_deriv = [s1, sm, s2, slope](double x) {
        if (x <= s1 || x >= s2) return 0.0;
        return x <= sm ? slope : -slope;
    };
    d.kinks = {s1, sm, s2};
    d.linf_bound = 1.0;
    d.tv_bound = 2.0;
    d.support_margin = 0.3 * L;
    return d;
}

InitialData make_sqrt_profile_data(const Domain1D& domain) {
    const double L = domain.volume();
    const double a = domain.a, b = domain.b;
    InitialData d;
    d.name = "sqrt";
    d.hypothesis = Hypothesis::F;
    d.domain = domain;
    d.evaluate = [a, b, L](double x) {
        if (x <= a || x >= b) return 0.0;
        const double m = std::min(x - a, b - x) / L;
        return std::min(1.0, 2.0 * std::sqrt(m));
    };
    d.evaluate_deriv = [a, b, L](double x) {
        if (x <= a || x >= b) return 0.0;
        const double da = x - a, db = b - x;
        const double m = std::min(da, db) / L;
        if (m >= 0.25) return 0.0;
        const double slope = 1.0 / std::sqrt(L * std::min(da, db));
        return da <= db ? slope : -slope;
    };
    d.kinks = {a, a + 0.25 * L, b - 0.25 * L, b};
    d.linf_bound = 1.0;
    d.w11_seminorm = 2.0;
    d.a_bound = 2.0;
    return d;
}

InitialData make_piecewise_linear_data(const Domain1D& domain, std::vector<double> xs,
                                       std::vector<double> vs, Hypothesis hyp,
                                       std::string name) {
    if (xs.size() != vs.size() || xs.size() < 2) {
        throw std::invalid_argument("piecewise_linear: need matching xs/vs with >= 2 points");
    }
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        if (xs[i + 1] < xs[i]) {
            throw std::invalid_argument("piecewise_linear: xs must be nondecreasing");
        }
    }
    if (xs.front() < domain.a - 1e-12 || xs.back() > domain.b + 1e-12) {
        throw std::invalid_argument("piecewise_linear: breakpoints outside the domain");
    }
    InitialData d;
    d.name = std::move(name);
    d.hypothesis = hyp;
    d.domain = domain;
    d.kinks = xs;
    d.evaluate = [xs, vs](double x) {
        if (x < xs.front() || x > xs.back()) return 0.0;
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        size_t j = it == xs.begin() ? 0 : (it - xs.begin() - 1);
        if (j + 1 >= xs.size()) return vs.back();
        const double x0 = xs[j], x1 = xs[j + 1];
        if (x1 == x0) return vs[j + 1];  // jump point: right value
        const double w = (x - x0) / (x1 - x0);
        return vs[j] * (1 - w) + vs[j + 1] * w;
    };
    d.evaluate_deriv = [xs, vs](double x) {
        if (x <= xs.front() || x >= xs.back()) return 0.0;
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        size_t j = it == xs.begin() ? 0 : (it - xs.begin() - 1);
        if (j + 1 >= xs.size()) return 0.0;
        const double x0 = xs[j], x1 = xs[j + 1];
        if (x1 == x0) return 0.0;
        return (vs[j + 1] - vs[j]) / (x1 - x0);
    };
    double sup = 0.0, var = 0.0;
    for (double v : vs) sup = std::max(sup, std::abs(v));
    for (size_t i = 0; i + 1 < vs.size(); ++i) var += std::abs(vs[i + 1] - vs[i]);
    d.linf_bound = sup;
    if (hyp == Hypothesis::E) {
        d.tv_bound = var + std::abs(vs.front()) + std::abs(vs.back());
        d.support_margin = std::min(xs.front() - domain.a, domain.b - xs.back());
    } else {
        d.w11_seminorm = var;
        d.a_bound = sup + 1.0;
    }
    return d;
}

InitialData load_piecewise_linear_csv(const Domain1D& domain, const std::string& path,
                                      Hypothesis hyp) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("x,value", 0) != 0) {
        throw std::runtime_error("breakpoint CSV: bad header in " + path);
    }
    std::vector<double> xs, vs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("breakpoint CSV: malformed row in " + path);
        }
        xs.push_back(std::stod(line.substr(0, comma)));
        vs.push_back(std::stod(line.substr(comma + 1)));
    }
    return make_piecewise_linear_data(domain, std::move(xs), std::move(vs), hyp, "custom_csv");
}

FluxModel flux_by_name(const std::string& name, double advection_speed) {
    if (name == "zero") return make_zero_flux();
    if (name == "advection") return make_advection_flux(advection_speed);
    if (name == "burgers") return make_burgers_flux();
    throw std::invalid_argument("unknown flux: " + name);
}

ViscosityModel viscosity_by_name(const std::string& name) {
    if (name == "constant") return make_constant_viscosity();
    if (name == "rational") return make_rational_viscosity();
    throw std::invalid_argument("unknown viscosity: " + name);
}

InitialData data_by_name(const std::string& name, const Domain1D& domain) {
    if (name == "step") return make_step_data(domain);
    if (name == "hat") return make_hat_data(domain);
    if (name == "sqrt") return make_sqrt_profile_data(domain);
    throw std::invalid_argument("unknown initial data: " + name);
}

}  // namespace viscoflow
