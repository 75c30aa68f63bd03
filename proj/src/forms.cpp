#include "ernstlax/forms.hpp"

namespace ernstlax {

MatrixOneForm hodge_star(const MatrixOneForm& s)
{
    MatrixOneForm out(s.grid());
    for (size_t k = 0; k < s.comp_rho.v.size(); ++k) {
        out.comp_rho.v[k] = -s.comp_z.v[k];
        out.comp_z.v[k] = s.comp_rho.v[k];
    }
    return out;
}

MatrixTwoForm wedge(const MatrixOneForm& s, const MatrixOneForm& x)
{
    if (s.grid() != x.grid())
        throw GridMismatch("wedge: 1-forms on different grids");
    MatrixTwoForm out(s.grid());
    for (size_t k = 0; k < out.coeff.v.size(); ++k)
        out.coeff.v[k] =
            s.comp_rho.v[k] * x.comp_z.v[k] - s.comp_z.v[k] * x.comp_rho.v[k];
    return out;
}

MatrixOneForm d0(const MatrixField& phi)
{
    return MatrixOneForm(partial_rho(phi), partial_z(phi));
}

MatrixTwoForm d1(const MatrixOneForm& s)
{
    return MatrixTwoForm(partial_rho(s.comp_z) - partial_z(s.comp_rho));
}

MatrixField commutator(const MatrixField& a, const MatrixField& b)
{
    if (a.grid != b.grid)
        throw GridMismatch("commutator: fields on different grids");
    MatrixField out(a.grid);
    for (size_t k = 0; k < out.v.size(); ++k)
        out.v[k] = commutator(a.v[k], b.v[k]);
    return out;
}

MatrixOneForm commutator(const MatrixOneForm& s, const MatrixField& psi)
{
    return MatrixOneForm(commutator(s.comp_rho, psi), commutator(s.comp_z, psi));
}

MatrixTwoForm commutator(const MatrixOneForm& s, const MatrixOneForm& x)
{
    return wedge(s, x) - wedge(x, s);
}

MatrixTwoForm anticommutator(const MatrixOneForm& s1, const MatrixOneForm& s2)
{
    return wedge(s1, s2) + wedge(s2, s1);
}

MatrixOneForm operator+(const MatrixOneForm& a, const MatrixOneForm& b)
{
    return MatrixOneForm(a.comp_rho + b.comp_rho, a.comp_z + b.comp_z);
}

MatrixOneForm operator-(const MatrixOneForm& a, const MatrixOneForm& b)
{
    return MatrixOneForm(a.comp_rho - b.comp_rho, a.comp_z - b.comp_z);
}

MatrixOneForm operator*(const MatrixOneForm& a, cdouble s)
{
    return MatrixOneForm(a.comp_rho * s, a.comp_z * s);
}

MatrixTwoForm operator+(const MatrixTwoForm& a, const MatrixTwoForm& b)
{
    return MatrixTwoForm(a.coeff + b.coeff);
}

MatrixTwoForm operator-(const MatrixTwoForm& a, const MatrixTwoForm& b)
{
    return MatrixTwoForm(a.coeff - b.coeff);
}

MatrixOneForm scale_by_rho(const MatrixOneForm& s)
{
    return MatrixOneForm(scale_by_rho(s.comp_rho), scale_by_rho(s.comp_z));
}

double interior_max_norm(const MatrixOneForm& s, int margin)
{
    return std::max(interior_max_norm(s.comp_rho, margin),
                    interior_max_norm(s.comp_z, margin));
}

namespace {

// One trapezoid increment between adjacent nodes; sign follows the direction
// of travel.
Matrix2 leg_increment(const MatrixField& comp, double h, int ia, int ja, int ib,
                      int jb)
{
    return (comp.at(ia, ja) + comp.at(ib, jb)) * (0.5 * h);
}

} // namespace

PathValues path_integrate(const MatrixOneForm& sigma, const GridPath& path,
                          const Matrix2& initial)
{
    const Grid& g = sigma.grid();
    if (!g.contains(path.i0, path.j0) || !g.contains(path.i1, path.j1))
        throw PathOffGrid("path endpoints outside grid");

    PathValues out;
    int i = path.i0, j = path.j0;
    Matrix2 acc = initial;
    out.nodes.emplace_back(i, j);
    out.values.push_back(acc);

    auto walk_rho = [&]() {
        const int di = path.i1 > i ? 1 : -1;
        while (i != path.i1) {
            const int ni = i + di;
            acc += leg_increment(sigma.comp_rho, g.h_rho * di, i, j, ni, j);
            i = ni;
            out.nodes.emplace_back(i, j);
            out.values.push_back(acc);
        }
    };
    auto walk_z = [&]() {
        const int dj = path.j1 > j ? 1 : -1;
        while (j != path.j1) {
            const int nj = j + dj;
            acc += leg_increment(sigma.comp_z, g.h_z * dj, i, j, i, nj);
            j = nj;
            out.nodes.emplace_back(i, j);
            out.values.push_back(acc);
        }
    };

    if (path.kind == GridPath::Kind::rho_then_z) {
        walk_rho();
        walk_z();
    } else {
        walk_z();
        walk_rho();
    }
    return out;
}

MatrixField integrate_potential(const MatrixOneForm& sigma, GridPath::Kind kind,
                                const Matrix2& base_value)
{
    const Grid& g = sigma.grid();
    MatrixField out(g);
    out.at(0, 0) = base_value;

    auto cum_rho = [&](int j) {
        for (int i = 1; i < g.n_rho; ++i)
            out.at(i, j) =
                out.at(i - 1, j) +
                leg_increment(sigma.comp_rho, g.h_rho, i - 1, j, i, j);
    };
    auto cum_z = [&](int i) {
        for (int j = 1; j < g.n_z; ++j)
            out.at(i, j) = out.at(i, j - 1) +
                           leg_increment(sigma.comp_z, g.h_z, i, j - 1, i, j);
    };

    if (kind == GridPath::Kind::rho_then_z) {
        cum_rho(0);
        for (int i = 0; i < g.n_rho; ++i)
            cum_z(i);
    } else {
        cum_z(0);
        for (int j = 0; j < g.n_z; ++j) {
            for (int i = 1; i < g.n_rho; ++i)
                out.at(i, j) =
                    out.at(i - 1, j) +
                    leg_increment(sigma.comp_rho, g.h_rho, i - 1, j, i, j);
        }
    }
    return out;
}

} // namespace ernstlax
