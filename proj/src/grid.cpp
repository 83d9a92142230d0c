#include "viscoflow/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "viscoflow/quadrature.hpp"

namespace viscoflow {

Domain1D::Domain1D(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw std::invalid_argument("Domain1D: need finite a < b");
    }
}

Grid::Grid(Domain1D dom, int n) : domain(dom), n_cells(n) {
    if (n < 1) throw std::invalid_argument("Grid: n_cells must be positive");
    h = (domain.b - domain.a) / n;
}

bool Grid::same_as(const Grid& other) const {
    return n_cells == other.n_cells && domain.a == other.domain.a &&
           domain.b == other.domain.b;
}

ScalarField::ScalarField(const Grid& g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != g.n_cells) {
        throw std::invalid_argument("ScalarField: values length must equal n_cells");
    }
}

bool ScalarField::all_finite() const {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

ScalarField sample_function(const Grid& g, const std::function<double(double)>& fn) {
    ScalarField f(g);
    for (int i = 0; i < g.n_cells; ++i) f.values[i] = fn(g.cell_center(i));
    return f;
}

ScalarField cell_average_function(const Grid& g, const std::function<double(double)>& fn,
                                  const std::vector<double>& breakpoints) {
    ScalarField f(g);
    for (int i = 0; i < g.n_cells; ++i) {
        const double lo = g.left_face(i), hi = g.left_face(i + 1);
        f.values[i] = gauss_integrate_subdivided(fn, lo, hi, breakpoints, 12) / g.h;
    }
    return f;
}

ScalarField SpaceTimeField::slice_field(int k) const {
    return ScalarField(grid, slices.at(k));
}

void SpaceTimeField::append_slice(double t, const std::vector<double>& values) {
    if (static_cast<int>(values.size()) != grid.n_cells) {
        throw std::invalid_argument("SpaceTimeField: slice length mismatch");
    }
    if (!times.empty() && !(t > times.back())) {
        throw std::invalid_argument("SpaceTimeField: times must be strictly increasing");
    }
    times.push_back(t);
    slices.push_back(values);
}

void SpaceTimeField::validate() const {
    if (times.size() != slices.size()) {
        throw std::runtime_error("SpaceTimeField: times/slices size mismatch");
    }
    if (times.empty()) throw std::runtime_error("SpaceTimeField: empty");
    if (times.front() != 0.0) throw std::runtime_error("SpaceTimeField: times[0] != 0");
    for (size_t k = 0; k + 1 < times.size(); ++k) {
        if (!(times[k] < times[k + 1])) {
            throw std::runtime_error("SpaceTimeField: times not increasing");
        }
    }
}

double norm_l1(const ScalarField& field) {
    double s = 0.0;
    for (double v : field.values) s += std::abs(v);
    return field.grid.h * s;
}

double norm_l2_sq(const ScalarField& field) {
    double s = 0.0;
    for (double v : field.values) s += v * v;
    return field.grid.h * s;
}

double norm_linf(const ScalarField& field) {
    double m = 0.0;
    for (double v : field.values) m = std::max(m, std::abs(v));
    return m;
}

double integrate_time(const SpaceTimeField& stf,
                      const std::function<double(const ScalarField&)>& slice_functional) {
    if (stf.n_slices() < 2) {
        throw std::invalid_argument("integrate_time: need at least 2 time slices");
    }
    double sum = 0.0;
    double prev = slice_functional(stf.slice_field(0));
    for (int k = 1; k < stf.n_slices(); ++k) {
        const double cur = slice_functional(stf.slice_field(k));
        sum += 0.5 * (prev + cur) * (stf.times[k] - stf.times[k - 1]);
        prev = cur;
    }
    return sum;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_field_csv(const ScalarField& field, std::ostream& os) {
    os << "x,value\n";
    for (int i = 0; i < field.size(); ++i) {
        os << format_real(field.grid.cell_center(i)) << ','
           << format_real(field.values[i]) << '\n';
    }
}

void write_field_csv(const ScalarField& field, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_field_csv(field, os);
}

void write_slices_csv(const SpaceTimeField& stf, std::ostream& os) {
    os << "t,x,value\n";
    for (int k = 0; k < stf.n_slices(); ++k) {
        for (int i = 0; i < stf.grid.n_cells; ++i) {
            os << format_real(stf.times[k]) << ','
               << format_real(stf.grid.cell_center(i)) << ','
               << format_real(stf.slices[k][i]) << '\n';
        }
    }
}

void write_slices_csv(const SpaceTimeField& stf, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_slices_csv(stf, os);
}

SpaceTimeField read_slices_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,x,value", 0) != 0) {
        throw std::runtime_error("slices CSV: bad header in " + path);
    }
    std::vector<double> ts, xs, vs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        double row[3];
        for (int j = 0; j < 3; ++j) {
            if (!std::getline(ss, tok, ',')) {
                throw std::runtime_error("slices CSV: malformed row in " + path);
            }
            row[j] = std::stod(tok);
        }
        ts.push_back(row[0]);
        xs.push_back(row[1]);
        vs.push_back(row[2]);
    }
    if (ts.empty()) throw std::runtime_error("slices CSV: no data in " + path);

    // Recover the grid from the first slice's cell centers.
    size_t n = 0;
    while (n < ts.size() && ts[n] == ts[0]) ++n;
    if (n < 1) throw std::runtime_error("slices CSV: empty first slice");
    double h = n > 1 ? xs[1] - xs[0] : 1.0;
    Grid grid(Domain1D(xs[0] - 0.5 * h, xs[n - 1] + 0.5 * h), static_cast<int>(n));

    SpaceTimeField stf;
    stf.grid = grid;
    if (ts.size() % n != 0) throw std::runtime_error("slices CSV: ragged slices");
    for (size_t k = 0; k * n < ts.size(); ++k) {
        std::vector<double> slice(vs.begin() + k * n, vs.begin() + (k + 1) * n);
        stf.append_slice(k == 0 ? ts[0] : ts[k * n], slice);
    }
    stf.validate();
    return stf;
}

}  // namespace viscoflow
