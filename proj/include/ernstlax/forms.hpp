#pragma once

#include "ernstlax/grid.hpp"

namespace ernstlax {

// Matrix-valued 1-form  sigma = comp_rho drho + comp_z dz.
struct MatrixOneForm {
    MatrixField comp_rho;
    MatrixField comp_z;

    MatrixOneForm() = default;
    explicit MatrixOneForm(const Grid& g) : comp_rho(g), comp_z(g) {}
    MatrixOneForm(MatrixField r, MatrixField z)
        : comp_rho(std::move(r)), comp_z(std::move(z))
    {
        if (comp_rho.grid != comp_z.grid)
            throw GridMismatch("1-form components on different grids");
    }
    const Grid& grid() const { return comp_rho.grid; }
};

// Matrix-valued 2-form  coeff drho ^ dz  (drho ^ dz is the volume orientation).
struct MatrixTwoForm {
    MatrixField coeff;

    MatrixTwoForm() = default;
    explicit MatrixTwoForm(const Grid& g) : coeff(g) {}
    explicit MatrixTwoForm(MatrixField c) : coeff(std::move(c)) {}
    const Grid& grid() const { return coeff.grid; }
};

// Hodge dual on 1-forms: *drho = dz, *dz = -drho, so *sigma = -s_z drho + s_rho dz.
MatrixOneForm hodge_star(const MatrixOneForm& s);

// (sigma ^ xi) coefficient = s_rho x_z - s_z x_rho with noncommutative products.
MatrixTwoForm wedge(const MatrixOneForm& s, const MatrixOneForm& x);

MatrixOneForm d0(const MatrixField& phi);
MatrixTwoForm d1(const MatrixOneForm& s);

// Graded commutators [z, x] = z^x - x^z and anticommutator {s1, s2} = s1^s2 + s2^s1.
// Degree compatibility is enforced by the overload set.
MatrixField commutator(const MatrixField& a, const MatrixField& b);
MatrixOneForm commutator(const MatrixOneForm& s, const MatrixField& psi);
MatrixTwoForm commutator(const MatrixOneForm& s, const MatrixOneForm& x);
MatrixTwoForm anticommutator(const MatrixOneForm& s1, const MatrixOneForm& s2);

MatrixOneForm operator+(const MatrixOneForm& a, const MatrixOneForm& b);
MatrixOneForm operator-(const MatrixOneForm& a, const MatrixOneForm& b);
MatrixOneForm operator*(const MatrixOneForm& a, cdouble s);
MatrixTwoForm operator+(const MatrixTwoForm& a, const MatrixTwoForm& b);
MatrixTwoForm operator-(const MatrixTwoForm& a, const MatrixTwoForm& b);

// rho * sigma: both components scaled by the coordinate rho.
MatrixOneForm scale_by_rho(const MatrixOneForm& s);

double interior_max_norm(const MatrixOneForm& s, int margin = 2);

// Cumulative trapezoid integral of sigma along an L-shaped path, starting from
// `initial` at the path's start node. Returns the node sequence and the value
// at each node in path order.
struct PathValues {
    std::vector<std::pair<int, int>> nodes;
    std::vector<Matrix2> values;
};
PathValues path_integrate(const MatrixOneForm& sigma, const GridPath& path,
                          const Matrix2& initial);

// Potential of sigma on the whole grid: trapezoid integral from the base
// corner (node 0,0) to every node along paths of the given kind, with the
// base value prescribed. Agrees with path_integrate node by node.
MatrixField integrate_potential(const MatrixOneForm& sigma, GridPath::Kind kind,
                                const Matrix2& base_value);

} // namespace ernstlax
