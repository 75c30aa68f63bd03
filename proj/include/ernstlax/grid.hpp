#pragma once

#include <utility>
#include <vector>

#include "ernstlax/matrix2.hpp"

namespace ernstlax {

// Uniform rectangular (rho, z) grid. rho_min > 0: the axis rho = 0 is a
// singular locus of the field equations and never enters a grid.
struct Grid {
    double rho_min{}, rho_max{}, z_min{}, z_max{};
    int n_rho{}, n_z{};
    double h_rho{}, h_z{};

    double rho(int i) const { return rho_min + h_rho * i; }
    double z(int j) const { return z_min + h_z * j; }
    int nodes() const { return n_rho * n_z; }

    bool contains(int i, int j) const
    {
        return i >= 0 && i < n_rho && j >= 0 && j < n_z;
    }

    friend bool operator==(const Grid& a, const Grid& b)
    {
        return a.rho_min == b.rho_min && a.rho_max == b.rho_max &&
               a.z_min == b.z_min && a.z_max == b.z_max && a.n_rho == b.n_rho &&
               a.n_z == b.n_z;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }
};

Grid make_grid(double rho_min, double rho_max, double z_min, double z_max,
               int n_rho, int n_z);

// Grid refined k-fold: same bounds, n -> k*(n-1)+1 so spacings divide exactly.
Grid refine(const Grid& g, int factor);

// Node-indexed storage, row-major in rho. Fields are immutable by convention:
// every operation returns a fresh field.
template <class T>
struct Field {
    Grid grid;
    std::vector<T> v;

    Field() = default;
    explicit Field(const Grid& g, T fill = T{}) : grid(g), v(g.nodes(), fill) {}

    T& at(int i, int j) { return v[static_cast<size_t>(i) * grid.n_z + j]; }
    const T& at(int i, int j) const
    {
        return v[static_cast<size_t>(i) * grid.n_z + j];
    }
};

using ScalarField = Field<cdouble>;
using MatrixField = Field<Matrix2>;

// L-shaped lattice path between two grid nodes.
struct GridPath {
    enum class Kind { rho_then_z, z_then_rho };
    int i0{}, j0{}, i1{}, j1{};
    Kind kind{Kind::rho_then_z};
};

namespace detail {

// Second-order first derivative along one index direction: centered stencil at
// interior nodes, one-sided 3-point stencils at the two boundary nodes.
template <class T, class Get>
void stencil_line(int n, double h, Get get, std::vector<T>& out)
{
    const double inv2h = 1.0 / (2.0 * h);
    out[0] = (get(0) * -3.0 + get(1) * 4.0 - get(2)) * inv2h;
    for (int k = 1; k < n - 1; ++k)
        out[k] = (get(k + 1) - get(k - 1)) * inv2h;
    out[n - 1] = (get(n - 1) * 3.0 - get(n - 2) * 4.0 + get(n - 3)) * inv2h;
}

} // namespace detail

template <class T>
Field<T> partial_rho(const Field<T>& f)
{
    Field<T> out(f.grid);
    std::vector<T> line(f.grid.n_rho);
    for (int j = 0; j < f.grid.n_z; ++j) {
        detail::stencil_line<T>(
            f.grid.n_rho, f.grid.h_rho, [&](int i) { return f.at(i, j); },
            line);
        for (int i = 0; i < f.grid.n_rho; ++i)
            out.at(i, j) = line[i];
    }
    return out;
}

template <class T>
Field<T> partial_z(const Field<T>& f)
{
    Field<T> out(f.grid);
    std::vector<T> line(f.grid.n_z);
    for (int i = 0; i < f.grid.n_rho; ++i) {
        detail::stencil_line<T>(
            f.grid.n_z, f.grid.h_z, [&](int j) { return f.at(i, j); }, line);
        for (int j = 0; j < f.grid.n_z; ++j)
            out.at(i, j) = line[j];
    }
    return out;
}

inline double node_norm(const Matrix2& m) { return m.frobenius(); }
inline double node_norm(const cdouble& s) { return std::abs(s); }

// Max node norm over the subgrid at least `margin` nodes from every boundary.
// Norms that feed tolerances use margin >= 2 so one-sided-stencil nodes (and
// their immediate neighbours under nested stencils) never enter.
template <class T>
double interior_max_norm(const Field<T>& f, int margin = 2)
{
    if (2 * margin >= f.grid.n_rho || 2 * margin >= f.grid.n_z)
        throw EmptyInterior("interior_max_norm: margin " +
                            std::to_string(margin) + " leaves no nodes");
    double m = 0.0;
    for (int i = margin; i < f.grid.n_rho - margin; ++i)
        for (int j = margin; j < f.grid.n_z - margin; ++j)
            m = std::max(m, node_norm(f.at(i, j)));
    return m;
}

template <class T>
double max_norm(const Field<T>& f)
{
    double m = 0.0;
    for (const auto& x : f.v)
        m = std::max(m, node_norm(x));
    return m;
}

// Elementwise helpers used all over the residual algebra.
template <class T>
Field<T> operator+(const Field<T>& a, const Field<T>& b)
{
    if (a.grid != b.grid)
        throw GridMismatch("field sum: grids differ");
    Field<T> out(a.grid);
    for (size_t k = 0; k < a.v.size(); ++k)
        out.v[k] = a.v[k] + b.v[k];
    return out;
}

template <class T>
Field<T> operator-(const Field<T>& a, const Field<T>& b)
{
    if (a.grid != b.grid)
        throw GridMismatch("field difference: grids differ");
    Field<T> out(a.grid);
    for (size_t k = 0; k < a.v.size(); ++k)
        out.v[k] = a.v[k] - b.v[k];
    return out;
}

template <class T, class S>
Field<T> operator*(const Field<T>& a, S s)
{
    Field<T> out(a.grid);
    for (size_t k = 0; k < a.v.size(); ++k)
        out.v[k] = a.v[k] * s;
    return out;
}

// Node values scaled by the coordinate rho; multiplies 1-form components in
// every rho*(...) construction.
template <class T>
Field<T> scale_by_rho(const Field<T>& f)
{
    Field<T> out(f.grid);
    for (int i = 0; i < f.grid.n_rho; ++i) {
        const double r = f.grid.rho(i);
        for (int j = 0; j < f.grid.n_z; ++j)
            out.at(i, j) = f.at(i, j) * r;
    }
    return out;
}

} // namespace ernstlax
