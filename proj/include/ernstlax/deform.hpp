#pragma once

#include "ernstlax/spectral.hpp"

namespace ernstlax {

// Positively oriented circle about lambda = 0. Nodes are equispaced in angle
// and constructed in conjugate pairs, so sums over them are exactly real for
// real towers.
struct Contour {
    double radius = 1.0;
    int node_count = 16;
};

Contour make_contour(double radius, int node_count);

// Node count sufficient for exact trapezoid quadrature on the tower's span.
int derived_node_count(const ChargeTower& tower);

std::vector<cdouble> contour_nodes(const Contour& c);

// (1/2 pi i) contour integral of Psi(lambda) dlambda / lambda: the mean of
// Psi over the nodes. Exact (up to roundoff) projection onto the lambda^0
// coefficient whenever node_count clears the tower width.
MatrixField contour_project(const SpectralFunction& s, const Contour& c);

// delta g / alpha = (1/2 pi i) contour integral of (g Psi + Psi^T g) dl/l.
struct Deformation {
    MatrixField delta_g;       // the density delta g / alpha
    double reality_violation;  // max imaginary part of the quadrature
};
Deformation hidden_symmetry_delta(const MatrixField& g,
                                  const SpectralFunction& s, const Contour& c);

// Residual of g' = g + alpha * density against the matrix Ernst equation,
// swept over alpha, with a log-log slope fit above the discretization floor
// (the undeformed solution's own residual). det drift is fitted over the
// same qualifying points.
struct SweepPoint {
    double alpha;
    double residual;
    double det_drift;
};
struct SweepResult {
    std::vector<SweepPoint> points;
    double floor_norm{};
    double slope{};      // NaN when at_floor
    double det_slope{};  // NaN when at_floor
    int fit_points{};
    bool at_floor{};
};
SweepResult deformation_residual_sweep(const MatrixField& g,
                                       const MatrixField& delta_density,
                                       const std::vector<double>& alphas);

std::vector<double> log_spaced(double lo, double hi, int count);

} // namespace ernstlax
