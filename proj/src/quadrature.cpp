#include "viscoflow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace viscoflow {

namespace {

GaussLegendre build_rule(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration from the Chebyshev initial guess; standard recurrence
    // for P_n and its derivative.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    std::reverse(rule.nodes.begin(), rule.nodes.end());
    std::reverse(rule.weights.begin(), rule.weights.end());
    return rule;
}

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const RealFn& f, double a, double fa, double b, double fb,
                     double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

const GaussLegendre& GaussLegendre::order(int n) {
    static std::map<int, GaussLegendre> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double gauss_integrate(const RealFn& f, double a, double b, int order) {
    const auto& rule = GaussLegendre::order(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

double gauss_integrate_subdivided(const RealFn& f, double a, double b,
                                  const std::vector<double>& breakpoints,
                                  int order) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double p : breakpoints) {
        if (p > a && p < b) pts.push_back(p);
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] > pts[i]) sum += gauss_integrate(f, pts[i], pts[i + 1], order);
    }
    return sum;
}

double adaptive_simpson(const RealFn& f, double a, double b, double tol,
                        int max_depth) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double adaptive_simpson_subdivided(const RealFn& f, double a, double b,
                                   const std::vector<double>& breakpoints,
                                   double tol) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double p : breakpoints) {
        if (p > a && p < b) pts.push_back(p);
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] > pts[i]) sum += adaptive_simpson(f, pts[i], pts[i + 1], tol);
    }
    return sum;
}

}  // namespace viscoflow
