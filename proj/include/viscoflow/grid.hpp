#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace viscoflow {

/// Bounded open interval (a, b); the spatial domain of every problem here.
struct Domain1D {
    double a = 0.0;
    double b = 1.0;

    Domain1D() = default;
    Domain1D(double a_, double b_);

    double volume() const { return b - a; }
    bool contains(double x) const { return x > a && x < b; }
};

/// Uniform cell-centred grid over a Domain1D.
struct Grid {
    Domain1D domain;
    int n_cells = 0;
    double h = 0.0;

    Grid() = default;
    Grid(Domain1D dom, int n);

    double cell_center(int i) const { return domain.a + (i + 0.5) * h; }
    double left_face(int i) const { return domain.a + i * h; }
    bool same_as(const Grid& other) const;
};

/// Grid function holding one value (cell average) per cell.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(g), values(g.n_cells, 0.0) {}
    ScalarField(const Grid& g, std::vector<double> v);

    int size() const { return grid.n_cells; }
    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }
    bool all_finite() const;
};

/// Point-sample fn at cell centers.
ScalarField sample_function(const Grid& g, const std::function<double(double)>& fn);

/// Cell averages of fn, integrating each cell with a Gauss rule split at the
/// given breakpoints (kinks or jumps of fn).
ScalarField cell_average_function(const Grid& g, const std::function<double(double)>& fn,
                                  const std::vector<double>& breakpoints = {});

/// Time-indexed stack of ScalarField slices over [0, T] on a shared grid.
/// times[0] = 0, strictly increasing, last entry = T.
struct SpaceTimeField {
    Grid grid;
    std::vector<double> times;
    std::vector<std::vector<double>> slices;

    int n_slices() const { return static_cast<int>(times.size()); }
    double final_time() const { return times.empty() ? 0.0 : times.back(); }
    ScalarField slice_field(int k) const;
    void append_slice(double t, const std::vector<double>& values);
    void validate() const;  // throws on any invariant violation
};

// Discrete norms. All are h-weighted except the sup norm.
double norm_l1(const ScalarField& field);
double norm_l2_sq(const ScalarField& field);
double norm_linf(const ScalarField& field);

/// Trapezoidal time integral of a per-slice functional. Needs >= 2 slices.
double integrate_time(const SpaceTimeField& stf,
                      const std::function<double(const ScalarField&)>& slice_functional);

// CSV serialization, 17 significant digits throughout.
std::string format_real(double v);
void write_field_csv(const ScalarField& field, std::ostream& os);
void write_field_csv(const ScalarField& field, const std::string& path);
void write_slices_csv(const SpaceTimeField& stf, std::ostream& os);
void write_slices_csv(const SpaceTimeField& stf, const std::string& path);
SpaceTimeField read_slices_csv(const std::string& path);

}  // namespace viscoflow
