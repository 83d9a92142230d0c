#pragma once

#include "viscoflow/grid.hpp"

namespace viscoflow {

/// Piecewise-linear approximate signum: 1 for s > 1/n, n*s for |s| <= 1/n,
/// -1 for s < -1/n. Odd, nondecreasing, n-Lipschitz, range [-1, 1].
double sg_n_eval(int n, double s);

/// Pointwise limit of sg_n: the signum with sg(0) = 0.
double sg_eval(double s);

/// Discrete total variation including the jumps against the zero exterior
/// trace at both ends (the solutions here carry zero Dirichlet data, so the
/// boundary layers must count):
///   sum_i |v_{i+1} - v_i| + |v_0| + |v_{n-1}|.
double total_variation(const ScalarField& field);

/// Trapezoidal time integral of the per-slice total variation, an
/// approximation of the space-gradient L1 norm over the space-time cylinder.
double space_bv_l1(const SpaceTimeField& stf);

/// h * sum_i sum_k |u_{i,k+1} - u_{i,k}|: the L1 norm of the time derivative
/// over the cylinder, computed from stored slices by first differences.
double time_deriv_l1(const SpaceTimeField& stf);

}  // namespace viscoflow
