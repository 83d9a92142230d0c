#pragma once

#include <string>
#include <vector>

namespace viscoflow {

/// One measured inequality: pass iff lhs <= rhs * (1 + tolerance).
/// provenance states the inequality being checked, in plain text.
struct EstimateReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string provenance;

    static EstimateReport make(std::string name, double lhs, double rhs,
                               double tolerance, std::string provenance);
    double margin() const;  // lhs / rhs - 1, with 0/0 treated as passing by 0
};

}  // namespace viscoflow
