#pragma once

#include <functional>
#include <string>
#include <vector>

#include "viscoflow/grid.hpp"

namespace viscoflow {

/// Closed real interval, used for the state range I the estimates live on.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double clamp(double y) const { return y < lo ? lo : (y > hi ? hi : y); }
};

/// Scalar flux f with its derivative and a global Lipschitz bound
/// (= sup |f'| over the working interval for clamped fluxes).
struct FluxModel {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> f_prime;
    double lipschitz_bound = 0.0;
};

/// Diffusion coefficient B with derivative, uniform lower bound r > 0 and a
/// sup bound. Both bounds are certified analytically per catalog entry and
/// re-checked by dense sampling in validate_hypothesis.
struct ViscosityModel {
    std::string name;
    std::function<double(double)> B;
    std::function<double(double)> B_prime;
    double r_lower = 0.0;
    double B_sup = 0.0;
};

enum class Hypothesis { E, F };

/// Initial datum on a bounded domain, zero-extended to the whole line.
///
/// Hypothesis E: bounded variation, essential support a positive distance
/// (support_margin) from the boundary; tv_bound records the total variation
/// including the zero-exterior boundary jumps.
/// Hypothesis F: continuous up to the boundary with boundary values 0 and
/// finite W^{1,1} seminorm; a_bound is the uniform sup bound A used by the
/// smooth approximants (fixed to linf_bound + 1).
struct InitialData {
    std::string name;
    Hypothesis hypothesis = Hypothesis::E;
    Domain1D domain;
    std::function<double(double)> evaluate;
    std::function<double(double)> evaluate_deriv;  // a.e. derivative; may be null
    std::vector<double> kinks;  // jump/kink abscissae, for quadrature splitting
    double linf_bound = 0.0;
    double tv_bound = 0.0;       // Hypothesis E
    double w11_seminorm = 0.0;   // Hypothesis F
    double support_margin = 0.0; // Hypothesis E
    double a_bound = 0.0;        // Hypothesis F
};

/// State interval I: [-||u0||_inf, ||u0||_inf] under E, [-A, A] under F.
Interval data_interval(const InitialData& data);

/// Max of |fn| over n equispaced samples of [lo, hi].
double sampled_sup(const std::function<double(double)>& fn, double lo, double hi,
                   int n = 10001);

/// Replace f outside I by its tangent lines at the endpoints. The result
/// agrees with f on I, is C^1 at the junctions and globally Lipschitz with
/// constant sup_I |f'|.
FluxModel clamp_flux(const FluxModel& raw, Interval I);

struct HypothesisClause {
    std::string clause;
    bool pass = false;
    std::string detail;
};

struct HypothesisReport {
    std::vector<HypothesisClause> clauses;
    bool all_pass() const;
};

/// Check every clause of Hypothesis E or F (per data.hypothesis) by dense
/// sampling; reports failures instead of throwing.
HypothesisReport validate_hypothesis(const FluxModel& flux, const ViscosityModel& visc,
                                     const InitialData& data);

// Built-in catalog.
//
// Fluxes: zero; linear advection c*u (globally Lipschitz as is); Burgers
// u^2/2 clamped to [-1,1] (tangent extension makes f' bounded on all of R).
// Viscosities: constant 1; 1 + 1/(1+u^2), whose infimum over R is 1 (attained
// in the limit |u| -> inf) and sup is 2 (at u = 0).
// Data: unit step indicator and unit hat, both supported on the middle 40% of
// the domain (E); a truncated square-root profile, continuous with zero
// boundary values and W^{1,1} seminorm 2 (F).
FluxModel make_zero_flux();
FluxModel make_advection_flux(double c = 1.0);
FluxModel make_burgers_flux(Interval I = {-1.0, 1.0});
ViscosityModel make_constant_viscosity();
ViscosityModel make_rational_viscosity();
InitialData make_step_data(const Domain1D& domain);
InitialData make_hat_data(const Domain1D& domain);
InitialData make_sqrt_profile_data(const Domain1D& domain);

/// Piecewise-linear datum from breakpoints; duplicate x entries encode jumps.
/// Values are zero-extended outside [xs.front(), xs.back()].
InitialData make_piecewise_linear_data(const Domain1D& domain, std::vector<double> xs,
                                       std::vector<double> vs, Hypothesis hyp,
                                       std::string name = "piecewise_linear");

/// Load breakpoints from a CSV with header "x,value".
InitialData load_piecewise_linear_csv(const Domain1D& domain, const std::string& path,
                                      Hypothesis hyp);

FluxModel flux_by_name(const std::string& name, double advection_speed = 1.0);
ViscosityModel viscosity_by_name(const std::string& name);
InitialData data_by_name(const std::string& name, const Domain1D& domain);

}  // namespace viscoflow
