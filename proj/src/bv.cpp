#include "viscoflow/bv.hpp"

#include <cmath>
#include <stdexcept>

namespace viscoflow {

double sg_n_eval(int n, double s) {
    if (n < 1) throw std::invalid_argument("sg_n_eval: n must be >= 1");
    const double inv = 1.0 / n;
    if (s > inv) return 1.0;
    if (s < -inv) return -1.0;
    return n * s;
}

double sg_eval(double s) {
    if (s > 0.0) return 1.0;
    if (s < 0.0) return -1.0;
    return 0.0;
}

double total_variation(const ScalarField& field) {
    const auto& v = field.values;
    if (v.empty()) return 0.0;
    double tv = std::abs(v.front()) + std::abs(v.back());
    for (size_t i = 0; i + 1 < v.size(); ++i) tv += std::abs(v[i + 1] - v[i]);
    return tv;
}

double space_bv_l1(const SpaceTimeField& stf) {
    return integrate_time(stf, [](const ScalarField& f) { return total_variation(f); });
}

double time_deriv_l1(const SpaceTimeField& stf) {
    if (stf.n_slices() < 2) {
        throw std::invalid_argument("time_deriv_l1: need at least 2 time slices");
    }
    double sum = 0.0;
    for (int k = 0; k + 1 < stf.n_slices(); ++k) {
        const auto& a = stf.slices[k];
        const auto& b = stf.slices[k + 1];
        for (int i = 0; i < stf.grid.n_cells; ++i) sum += std::abs(b[i] - a[i]);
    }
    return stf.grid.h * sum;
}

}  // namespace viscoflow
