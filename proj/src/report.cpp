#include "viscoflow/report.hpp"

#include <utility>

namespace viscoflow {

EstimateReport EstimateReport::make(std::string name, double lhs, double rhs,
                                    double tolerance, std::string provenance) {
    EstimateReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.pass = lhs <= rhs * (1.0 + tolerance);
    r.provenance = std::move(provenance);
    return r;
}

double EstimateReport::margin() const {
    if (rhs == 0.0) return lhs == 0.0 ? 0.0 : 1.0;
    return lhs / rhs - 1.0;
}

}  // namespace viscoflow
