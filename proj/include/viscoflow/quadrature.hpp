#pragma once

#include <functional>
#include <vector>

namespace viscoflow {

using RealFn = std::function<double(double)>;

/// Gauss-Legendre rule on [-1, 1]. Nodes/weights are computed once per order
/// by Newton iteration on the Legendre polynomial and cached.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendre& order(int n);
};

/// Integrate f over [a, b] with a single Gauss-Legendre rule of given order.
double gauss_integrate(const RealFn& f, double a, double b, int order = 24);

/// Gauss-Legendre over [a, b] split at the interior breakpoints. Points
/// outside (a, b) are ignored. Used when the integrand is piecewise smooth.
double gauss_integrate_subdivided(const RealFn& f, double a, double b,
                                  const std::vector<double>& breakpoints,
                                  int order = 24);

/// Adaptive Simpson quadrature to absolute tolerance tol.
double adaptive_simpson(const RealFn& f, double a, double b, double tol = 1e-12,
                        int max_depth = 40);

/// Adaptive Simpson split at interior breakpoints, tolerance shared per piece.
double adaptive_simpson_subdivided(const RealFn& f, double a, double b,
                                   const std::vector<double>& breakpoints,
                                   double tol = 1e-12);

}  // namespace viscoflow
