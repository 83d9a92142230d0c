#pragma once

#include <string>
#include <vector>

#include "viscoflow/entropy.hpp"
#include "viscoflow/estimates.hpp"
#include "viscoflow/mollify.hpp"
#include "viscoflow/report.hpp"
#include "viscoflow/solver.hpp"

namespace viscoflow {

// All writers emit 17-significant-digit decimals and deterministic row order.

void write_estimates_csv(const std::vector<EstimateReport>& reports,
                         const std::string& path);
void write_sweep_report_csv(const std::vector<SweepReportRow>& rows,
                            const std::string& path);
void write_convergence_csv(const SweepResult& sweep, const std::string& path);
void write_diagnostics_csv(const std::vector<StepDiagnostics>& diags,
                           const std::string& path);
void write_mollifier_bounds_csv(const MollifierBoundsReport& report,
                                const std::string& path);
void write_entropy_csv(const EntropyReport& report, const std::string& path);
void write_bv_aggregate_csv(const std::vector<std::pair<double, BvAggregateInfo>>& rows,
                            const std::string& path);

}  // namespace viscoflow
