#include "ernstlax/solutions.hpp"

#include <cmath>

namespace ernstlax {

ScalarField ErnstPotential::E() const
{
    ScalarField e(f.grid);
    for (size_t k = 0; k < f.v.size(); ++k)
        e.v[k] = cdouble(f.v[k].real(), omega.v[k].real());
    return e;
}

MetricSolution potential_to_matrix(const ErnstPotential& p)
{
    MetricSolution s;
    s.g = MatrixField(p.f.grid);
    for (size_t k = 0; k < p.f.v.size(); ++k) {
        const double f = p.f.v[k].real();
        const double w = p.omega.v[k].real();
        if (f <= 0.0)
            throw NonPositiveF("potential_to_matrix: f <= 0 at a node");
        Matrix2& m = s.g.v[k];
        m.m11 = 1.0 / f;
        m.m12 = w / f;
        m.m21 = w / f;
        m.m22 = (f * f + w * w) / f;
    }
    return s;
}

ErnstPotential matrix_to_potential(const MetricSolution& s)
{
    ErnstPotential p;
    p.f = ScalarField(s.g.grid);
    p.omega = ScalarField(s.g.grid);
    for (size_t k = 0; k < s.g.v.size(); ++k) {
        const double g11 = s.g.v[k].m11.real();
        if (g11 <= 0.0)
            throw BadParametrization("matrix_to_potential: g11 <= 0 at a node");
        p.f.v[k] = 1.0 / g11;
        p.omega.v[k] = s.g.v[k].m12.real() / g11;
    }
    return p;
}

namespace {

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, const std::string& solution)
{
    auto it = params.find(key);
    if (it == params.end())
        throw BadParameters(solution + ": missing parameter '" + key + "'");
    return it->second;
}

} // namespace

MetricSolution catalog_solution(const std::string& name,
                                const std::map<std::string, double>& params,
                                const Grid& grid)
{
    ErnstPotential p;
    p.f = ScalarField(grid, cdouble(1.0));
    p.omega = ScalarField(grid, cdouble(0.0));

    if (name == "flat") {
        // f = 1, omega = 0
    } else if (name == "curzon") {
        const double m = get_param(params, "m", name);
        if (m <= 0.0)
            throw BadParameters("curzon: m must be positive");
        for (int i = 0; i < grid.n_rho; ++i)
            for (int j = 0; j < grid.n_z; ++j) {
                const double rho = grid.rho(i), z = grid.z(j);
                p.f.at(i, j) = std::exp(-2.0 * m / std::hypot(rho, z));
            }
    } else if (name == "schwarzschild") {
        const double m = get_param(params, "m", name);
        if (m <= 0.0)
            throw BadParameters("schwarzschild: m must be positive");
        for (int i = 0; i < grid.n_rho; ++i)
            for (int j = 0; j < grid.n_z; ++j) {
                const double rho = grid.rho(i), z = grid.z(j);
                const double rp = std::hypot(rho, z - m);
                const double rm = std::hypot(rho, z + m);
                p.f.at(i, j) = (rp + rm - 2.0 * m) / (rp + rm + 2.0 * m);
            }
    } else if (name == "kerr") {
        const double pp = get_param(params, "p", name);
        const double q = get_param(params, "q", name);
        const double k = get_param(params, "k", name);
        if (k <= 0.0)
            throw BadParameters("kerr: k must be positive");
        if (std::abs(pp * pp + q * q - 1.0) > 1e-12)
            throw BadParameters("kerr: p^2 + q^2 must equal 1");
        for (int i = 0; i < grid.n_rho; ++i)
            for (int j = 0; j < grid.n_z; ++j) {
                const double rho = grid.rho(i), z = grid.z(j);
                const double rp = std::hypot(rho, z - k);
                const double rm = std::hypot(rho, z + k);
                const double x = (rp + rm) / (2.0 * k);
                const double y = (rp - rm) / (2.0 * k);
                const cdouble xi(pp * x, -q * y);
                const cdouble E = (xi - 1.0) / (xi + 1.0);
                p.f.at(i, j) = E.real();
                p.omega.at(i, j) = E.imag();
            }
    } else {
        throw UnknownSolution("unknown solution '" + name + "'");
    }

    for (const auto& fv : p.f.v)
        if (fv.real() <= 0.0)
            throw SingularityOnGrid(name + ": f <= 0 on the grid");

    MetricSolution s = potential_to_matrix(p);
    s.name = name;
    s.params = params;
    return s;
}

MatrixOneForm connection(const MatrixField& g)
{
    const MatrixField grho = partial_rho(g);
    const MatrixField gz = partial_z(g);
    MatrixOneForm gamma(g.grid);
    for (int i = 0; i < g.grid.n_rho; ++i)
        for (int j = 0; j < g.grid.n_z; ++j) {
            Matrix2 ginv;
            try {
                ginv = inverse(g.at(i, j));
            } catch (const SingularMatrix&) {
                throw SingularMatrix("connection: singular g at node (" +
                                     std::to_string(i) + "," +
                                     std::to_string(j) + ")");
            }
            gamma.comp_rho.at(i, j) = ginv * grho.at(i, j);
            gamma.comp_z.at(i, j) = ginv * gz.at(i, j);
        }
    return gamma;
}

MatrixField ernst_matrix_residual(const MatrixField& g)
{
    const MatrixOneForm gamma = connection(g);
    return partial_rho(scale_by_rho(gamma.comp_rho)) +
           partial_z(scale_by_rho(gamma.comp_z));
}

ScalarField ernst_scalar_residual(const ErnstPotential& p)
{
    const ScalarField E = p.E();
    const ScalarField Erho = partial_rho(E);
    const ScalarField Ez = partial_z(E);
    const ScalarField Err = partial_rho(Erho);
    const ScalarField Ezz = partial_z(Ez);
    ScalarField out(E.grid);
    for (int i = 0; i < E.grid.n_rho; ++i) {
        const double rho = E.grid.rho(i);
        for (int j = 0; j < E.grid.n_z; ++j) {
            const cdouble lap =
                Err.at(i, j) + Erho.at(i, j) / rho + Ezz.at(i, j);
            const cdouble grad2 = Erho.at(i, j) * Erho.at(i, j) +
                                  Ez.at(i, j) * Ez.at(i, j);
            out.at(i, j) = E.at(i, j).real() * lap - grad2;
        }
    }
    return out;
}

MatrixTwoForm maurer_cartan(const MatrixOneForm& gamma)
{
    return d1(gamma) + wedge(gamma, gamma);
}

MatrixTwoForm divergence_form(const MatrixOneForm& gamma)
{
    return d1(scale_by_rho(hodge_star(gamma)));
}

PotentialX potential_X(const MatrixField& g)
{
    const MatrixOneForm sigma = scale_by_rho(hodge_star(connection(g)));
    PotentialX out;
    out.X = integrate_potential(sigma, GridPath::Kind::rho_then_z,
                                Matrix2::zero());
    const MatrixField alt = integrate_potential(
        sigma, GridPath::Kind::z_then_rho, Matrix2::zero());
    out.path_disagreement = interior_max_norm(out.X - alt);

    const MatrixField Xr = partial_rho(out.X);
    const MatrixField Xz = partial_z(out.X);
    const MatrixField Xrr = partial_rho(Xr);
    const MatrixField Xzz = partial_z(Xz);
    out.residual38 = MatrixField(g.grid);
    for (int i = 0; i < g.grid.n_rho; ++i) {
        const double rho = g.grid.rho(i);
        for (int j = 0; j < g.grid.n_z; ++j)
            out.residual38.at(i, j) =
                Xr.at(i, j) - (Xrr.at(i, j) + Xzz.at(i, j)) * rho +
                commutator(Xr.at(i, j), Xz.at(i, j));
    }
    return out;
}

} // namespace ernstlax
