#pragma once

#include <map>
#include <string>

#include "ernstlax/forms.hpp"

namespace ernstlax {

// Ernst potential E = f + i omega with f > 0; f and omega are real fields.
struct ErnstPotential {
    ScalarField f;
    ScalarField omega;

    ScalarField E() const;
};

// Symmetric unit-determinant real metric block g, plus catalog provenance.
struct MetricSolution {
    MatrixField g;
    std::string name;
    std::map<std::string, double> params;
};

// g = (1/f) [[1, w], [w, f^2 + w^2]]; det g = 1 identically.
MetricSolution potential_to_matrix(const ErnstPotential& p);

// Inverse parametrization: f = 1/g11, w = g12/g11.
ErnstPotential matrix_to_potential(const MetricSolution& s);

// Catalog of exact solutions on a grid. Names: flat, curzon (m),
// schwarzschild (m), kerr (p, q, k with p^2 + q^2 = 1). Throws
// SingularityOnGrid if f <= 0 anywhere (ergoregion or rod touching the grid).
MetricSolution catalog_solution(const std::string& name,
                                const std::map<std::string, double>& params,
                                const Grid& grid);

// Connection gamma = g^{-1} dg = A drho + B dz via stencil derivatives.
MatrixOneForm connection(const MatrixField& g);

// (rho g^{-1} g_rho)_rho + (rho g^{-1} g_z)_z with nested stencils.
MatrixField ernst_matrix_residual(const MatrixField& g);

// (Re E)(E_rhorho + E_rho/rho + E_zz) - (E_rho^2 + E_z^2).
ScalarField ernst_scalar_residual(const ErnstPotential& p);

// d gamma + gamma ^ gamma; vanishes identically for gamma = connection(g).
MatrixTwoForm maurer_cartan(const MatrixOneForm& gamma);

// d(rho * gamma); its coefficient is the matrix Ernst residual.
MatrixTwoForm divergence_form(const MatrixOneForm& gamma);

// Matrix potential X with rho * gamma = dX, integrated from the grid corner
// with X(base) = 0, plus the residual of
// X_rho - rho (X_rhorho + X_zz) + [X_rho, X_z].
struct PotentialX {
    MatrixField X;
    MatrixField residual38;
    double path_disagreement; // interior norm of rho-then-z vs z-then-rho
};
PotentialX potential_X(const MatrixField& g);

} // namespace ernstlax
