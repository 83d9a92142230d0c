#include "viscoflow/csvio.hpp"

#include <fstream>
#include <stdexcept>

namespace viscoflow {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

}  // namespace

void write_estimates_csv(const std::vector<EstimateReport>& reports,
                         const std::string& path) {
    auto os = open_out(path);
    os << "estimate,lhs,rhs,tol,pass\n";
    for (const auto& r : reports) {
        os << r.name << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
           << format_real(r.tolerance) << ',' << (r.pass ? 1 : 0) << '\n';
    }
}

void write_sweep_report_csv(const std::vector<SweepReportRow>& rows,
                            const std::string& path) {
    auto os = open_out(path);
    os << "eps,estimate,lhs,rhs,tol,pass\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        os << format_real(row.eps) << ',' << r.name << ',' << format_real(r.lhs) << ','
           << format_real(r.rhs) << ',' << format_real(r.tolerance) << ','
           << (r.pass ? 1 : 0) << '\n';
    }
}

void write_convergence_csv(const SweepResult& sweep, const std::string& path) {
    auto os = open_out(path);
    os << "eps,cauchy_l1,oracle_l1\n";
    for (size_t k = 0; k < sweep.eps_list.size(); ++k) {
        os << format_real(sweep.eps_list[k]) << ',';
        // cauchy_l1 on row k is the distance to the next (smaller) epsilon.
        if (k < sweep.cauchy_l1.size()) {
            os << format_real(sweep.cauchy_l1[k]);
        } else {
            os << "nan";
        }
        os << ',';
        if (k < sweep.oracle_l1.size()) {
            os << format_real(sweep.oracle_l1[k]);
        } else {
            os << "nan";
        }
        os << '\n';
    }
}

void write_diagnostics_csv(const std::vector<StepDiagnostics>& diags,
                           const std::string& path) {
    auto os = open_out(path);
    os << "step,t,mass,linf\n";
    for (const auto& d : diags) {
        os << d.step << ',' << format_real(d.t) << ',' << format_real(d.mass) << ','
           << format_real(d.linf) << '\n';
    }
}

void write_mollifier_bounds_csv(const MollifierBoundsReport& report,
                                const std::string& path) {
    auto os = open_out(path);
    os << "eps,sup_ratio,tv_ratio,c_eps\n";
    for (const auto& row : report.rows) {
        os << format_real(row.eps) << ',' << format_real(row.sup_ratio) << ','
           << format_real(row.tv_ratio) << ',' << format_real(row.c_eps) << '\n';
    }
}

void write_entropy_csv(const EntropyReport& report, const std::string& path) {
    auto os = open_out(path);
    os << "kind,k,testfn_id,residual,tolerance,pass\n";
    for (const auto& row : report.rows) {
        os << row.kind << ',' << format_real(row.k) << ',' << row.testfn_id << ','
           << format_real(row.residual) << ',' << format_real(row.tolerance) << ','
           << (row.pass ? 1 : 0) << '\n';
    }
}

void write_bv_aggregate_csv(const std::vector<std::pair<double, BvAggregateInfo>>& rows,
                            const std::string& path) {
    auto os = open_out(path);
    os << "eps,grad_l1_spacetime,tv0,t_times_tv0\n";
    for (const auto& [eps, info] : rows) {
        os << format_real(eps) << ',' << format_real(info.grad_l1_spacetime) << ','
           << format_real(info.tv0) << ',' << format_real(info.t_times_tv0) << '\n';
    }
}

}  // namespace viscoflow
