#pragma once

#include <vector>

#include "viscoflow/grid.hpp"
#include "viscoflow/models.hpp"

namespace viscoflow {

/// Standard bump mollifier supported in [-eps, eps]:
///   rho_eps(x) = (k/eps) * exp(-1 / (1 - (x/eps)^2)),
/// with k computed once so that every member of the family has unit mass.
class MollifierKernel {
  public:
    explicit MollifierKernel(double eps);

    double epsilon() const { return eps_; }
    double normalization() const { return k_; }

    double value(double x) const;
    double deriv(double x) const;
    double second_deriv(double x) const;

    /// Mass of the unit-scale profile exp(-1/(1-s^2)) on (-1, 1).
    static double unit_profile_mass();

  private:
    double eps_;
    double k_;
};

// Convolutions of the kernel (or its derivatives) with a zero-extended datum,
// evaluated pointwise by Gauss quadrature split at the datum's kinks. Because
// the derivatives fall on the kernel these are exact identities for
// (u0 * rho_eps)', (u0 * rho_eps)''.
double mollified_value(const InitialData& u0, const MollifierKernel& kernel, double x);
double mollified_deriv(const InitialData& u0, const MollifierKernel& kernel, double x);
double mollified_second_deriv(const InitialData& u0, const MollifierKernel& kernel,
                              double x);

/// u0 * rho_eps restricted to cell averages of the given grid, evaluated on a
/// 4x finer sampling. Requires Hypothesis E, 0 < eps < support_margin (so the
/// mollified support stays inside the domain).
ScalarField mollify_data(const InitialData& u0, double eps, const Grid& grid);

struct MollifierBoundsRow {
    double eps = 0.0;
    double sup_ratio = 0.0;  // ||u0eps||_inf / ||u0||_inf
    double tv_ratio = 0.0;   // ||(u0eps)'||_L1 / TV(u0)
    double c_eps = 0.0;      // eps * ||(u0eps)''||_L1 / TV(u0)
};

struct MollifierBoundsReport {
    std::vector<MollifierBoundsRow> rows;
    double empirical_c = 0.0;  // sup of c_eps over the list
};

/// Quadrature check of the mollifier bounds for each admissible eps:
/// sup_ratio <= 1 and tv_ratio <= 1 hold exactly for the convolution; c_eps
/// is measured and its sup reported as the empirical constant.
MollifierBoundsReport verify_mollifier_bounds(const InitialData& u0,
                                              const std::vector<double>& eps_list);

/// Smooth compactly supported approximant for Hypothesis F data, built by
/// cutoff (linear ramps over [a+eps, a+2eps] and mirrored) then mollification
/// at scale eps/2. Satisfies ||result||_inf <= A and converges in W^{1,1}.
ScalarField approximate_w11(const InitialData& u0, double eps, const Grid& grid);

// Continuous evaluators behind approximate_w11, for quadrature-based tests.
double w11_approx_value(const InitialData& u0, double eps, double x);
double w11_approx_deriv(const InitialData& u0, double eps, double x);

/// ||u0eps - u0||_{L1} + ||(u0eps)' - u0'||_{L1} for the cutoff-mollify
/// approximant; requires u0.evaluate_deriv.
double w11_approx_error(const InitialData& u0, double eps);

/// f * rho_eps realised as a fixed symmetric quadrature stencil with weights
/// normalised to unit mass, so affine fluxes are reproduced exactly and
/// |f_eps'| never exceeds the Lipschitz bound of f.
FluxModel mollify_flux(const FluxModel& flux, double eps);

}  // namespace viscoflow
