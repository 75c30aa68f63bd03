#pragma once

#include "ernstlax/solutions.hpp"

namespace ernstlax {

// Symmetry characteristic Phi of an infinitesimal deformation delta g = a g Phi.
struct SymmetryCharacteristic {
    MatrixField phi;
    std::string provenance;
};

// D Phi = d Phi + [gamma, Phi].
MatrixOneForm covariant_derivative(const MatrixOneForm& gamma,
                                   const MatrixField& phi);

// Coefficient of d(rho * D Phi): (rho D_rho Phi)_rho + (rho D_z Phi)_z.
// Vanishes on solutions when Phi is a symmetry characteristic.
MatrixField symmetry_residual(const MatrixField& g, const MatrixField& phi);

// Seed characteristics. Names: constant (needs c), z_translation (Phi = B),
// linear_z (Phi = c z, valid on the flat background only).
SymmetryCharacteristic characteristic_catalog(const std::string& name,
                                              const MetricSolution& sol,
                                              const Matrix2& c = Matrix2::unit(1, 2));

} // namespace ernstlax
