#include "ernstlax/symmetry.hpp"

namespace ernstlax {

MatrixOneForm covariant_derivative(const MatrixOneForm& gamma,
                                   const MatrixField& phi)
{
    if (gamma.grid() != phi.grid)
        throw GridMismatch("covariant_derivative: grids differ");
    return d0(phi) + commutator(gamma, phi);
}

MatrixField symmetry_residual(const MatrixField& g, const MatrixField& phi)
{
    const MatrixOneForm gamma = connection(g);
    const MatrixOneForm dphi = covariant_derivative(gamma, phi);
    return d1(scale_by_rho(hodge_star(dphi))).coeff;
}

SymmetryCharacteristic characteristic_catalog(const std::string& name,
                                              const MetricSolution& sol,
                                              const Matrix2& c)
{
    SymmetryCharacteristic out;
    out.provenance = name;
    const Grid& grid = sol.g.grid;

    if (name == "constant") {
        out.phi = MatrixField(grid, c);
    } else if (name == "z_translation") {
        out.phi = connection(sol.g).comp_z;
    } else if (name == "linear_z") {
        if (sol.name != "flat")
            throw BackgroundMismatch(
                "linear_z is a valid seed on the flat background only, got '" +
                sol.name + "'");
        out.phi = MatrixField(grid);
        for (int i = 0; i < grid.n_rho; ++i)
            for (int j = 0; j < grid.n_z; ++j)
                out.phi.at(i, j) = c * grid.z(j);
    } else {
        throw UnknownCharacteristic("unknown characteristic '" + name + "'");
    }
    return out;
}

} // namespace ernstlax
