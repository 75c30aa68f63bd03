#include "ernstlax/spectral.hpp"

namespace ernstlax {

cdouble ipow(cdouble lambda, int n)
{
    cdouble acc(1.0, 0.0);
    if (n >= 0) {
        for (int k = 0; k < n; ++k)
            acc *= lambda;
    } else {
        const cdouble inv = 1.0 / lambda;
        for (int k = 0; k < -n; ++k)
            acc *= inv;
    }
    return acc;
}

namespace {

void require_lambda(cdouble lambda)
{
    if (lambda == cdouble(0.0, 0.0))
        throw ZeroLambda("lambda = 0 is outside the Laurent annulus");
}

} // namespace

MatrixField evaluate_psi(const SpectralFunction& s, cdouble lambda)
{
    require_lambda(lambda);
    MatrixField out(s.tower.grid);
    for (int n = s.tower.n_min; n <= s.tower.n_max; ++n) {
        const cdouble w = ipow(lambda, n);
        const MatrixField& lvl = s.tower.level(n);
        for (size_t k = 0; k < out.v.size(); ++k)
            out.v[k] += lvl.v[k] * w;
    }
    return out;
}

MatrixField evaluate_psi_lambda(const SpectralFunction& s, cdouble lambda)
{
    require_lambda(lambda);
    MatrixField out(s.tower.grid);
    for (int n = s.tower.n_min; n <= s.tower.n_max; ++n) {
        if (n == 0)
            continue;
        const cdouble w = ipow(lambda, n - 1) * cdouble(n);
        const MatrixField& lvl = s.tower.level(n);
        for (size_t k = 0; k < out.v.size(); ++k)
            out.v[k] += lvl.v[k] * w;
    }
    return out;
}

LaxComponents lax_residual_components(const MatrixOneForm& gamma,
                                      const MatrixField& psi,
                                      const MatrixField& psi_lambda,
                                      cdouble lambda)
{
    require_lambda(lambda);
    const MatrixOneForm dpsi = covariant_derivative(gamma, psi);
    const MatrixField psi_rho = partial_rho(psi);
    const MatrixField psi_z = partial_z(psi);
    const Grid& g = psi.grid;
    const cdouble invl = 1.0 / lambda;

    LaxComponents out{MatrixField(g), MatrixField(g)};
    for (int i = 0; i < g.n_rho; ++i) {
        const double rho = g.rho(i);
        for (int j = 0; j < g.n_z; ++j) {
            out.eq1.at(i, j) = dpsi.comp_rho.at(i, j) * rho -
                               psi_lambda.at(i, j) * (2.0 * lambda) -
                               psi_z.at(i, j) * invl;
            out.eq2.at(i, j) =
                dpsi.comp_z.at(i, j) * rho + psi_rho.at(i, j) * invl;
        }
    }
    return out;
}

MatrixOneForm lax_residual_fields(const MatrixOneForm& gamma,
                                  const MatrixField& psi,
                                  const MatrixField& psi_lambda,
                                  cdouble lambda)
{
    const LaxComponents c =
        lax_residual_components(gamma, psi, psi_lambda, lambda);
    MatrixOneForm out(psi.grid);
    for (size_t k = 0; k < out.comp_rho.v.size(); ++k) {
        out.comp_rho.v[k] = -c.eq2.v[k];
        out.comp_z.v[k] = c.eq1.v[k];
    }
    return out;
}

MatrixOneForm lax_residual_exterior(const MatrixField& g,
                                    const SpectralFunction& s, cdouble lambda)
{
    const MatrixOneForm gamma = connection(g);
    return lax_residual_fields(gamma, evaluate_psi(s, lambda),
                               evaluate_psi_lambda(s, lambda), lambda);
}

MatrixOneForm star_form_residual(const MatrixOneForm& gamma,
                                 const MatrixField& psi,
                                 const MatrixField& psi_lambda,
                                 cdouble lambda)
{
    require_lambda(lambda);
    const MatrixOneForm dpsi = d0(psi);
    const MatrixOneForm star_dpsi = hodge_star(dpsi);
    const MatrixOneForm bracket = commutator(gamma, psi);
    const Grid& g = psi.grid;

    MatrixOneForm out(g);
    for (int i = 0; i < g.n_rho; ++i) {
        const cdouble lr = lambda * g.rho(i);
        for (int j = 0; j < g.n_z; ++j) {
            out.comp_rho.at(i, j) =
                star_dpsi.comp_rho.at(i, j) +
                (dpsi.comp_rho.at(i, j) + bracket.comp_rho.at(i, j)) * lr -
                psi_lambda.at(i, j) * (2.0 * lambda * lambda);
            out.comp_z.at(i, j) =
                star_dpsi.comp_z.at(i, j) +
                (dpsi.comp_z.at(i, j) + bracket.comp_z.at(i, j)) * lr;
        }
    }
    return out;
}

MatrixOneForm star_form_residual(const MatrixField& g,
                                 const SpectralFunction& s, cdouble lambda)
{
    return star_form_residual(connection(g), evaluate_psi(s, lambda),
                              evaluate_psi_lambda(s, lambda), lambda);
}

SpectralInvariant spectral_invariant(const Grid& grid, cdouble lambda)
{
    require_lambda(lambda);
    const cdouble invl = 1.0 / lambda;

    SpectralInvariant out{ScalarField(grid), ScalarField(grid),
                          ScalarField(grid)};
    for (int i = 0; i < grid.n_rho; ++i) {
        const double rho = grid.rho(i);
        for (int j = 0; j < grid.n_z; ++j)
            out.s.at(i, j) =
                grid.z(j) - lambda * (0.5 * rho * rho) + 0.5 * invl;
    }
    const ScalarField s_rho = partial_rho(out.s);
    const ScalarField s_z = partial_z(out.s);
    for (int i = 0; i < grid.n_rho; ++i) {
        const double rho = grid.rho(i);
        for (int j = 0; j < grid.n_z; ++j) {
            const cdouble s_lambda = -0.5 * rho * rho - 0.5 * invl * invl;
            out.L1.at(i, j) = rho * s_rho.at(i, j) - 2.0 * lambda * s_lambda -
                              invl * s_z.at(i, j);
            out.L2.at(i, j) = rho * s_z.at(i, j) + invl * s_rho.at(i, j);
        }
    }
    return out;
}

MatrixOneForm bz_residual(const MatrixOneForm& gamma, const MatrixField& phi,
                          const MatrixField& phi_lambda, cdouble lambda,
                          BzBracket bracket)
{
    require_lambda(lambda);
    if (gamma.grid() != phi.grid)
        throw GridMismatch("bz_residual: grids differ");
    const MatrixOneForm dphi = d0(phi);
    const MatrixOneForm star_dphi = hodge_star(dphi);
    const MatrixOneForm star_gamma = hodge_star(gamma);
    const Grid& g = phi.grid;
    const cdouble invl = 1.0 / lambda;

    MatrixOneForm out(g);
    for (int i = 0; i < g.n_rho; ++i) {
        const double rho = g.rho(i);
        for (int j = 0; j < g.n_z; ++j) {
            Matrix2 brho = star_gamma.comp_rho.at(i, j) * phi.at(i, j);
            Matrix2 bz = star_gamma.comp_z.at(i, j) * phi.at(i, j);
            if (bracket == BzBracket::commutator) {
                brho -= phi.at(i, j) * star_gamma.comp_rho.at(i, j);
                bz -= phi.at(i, j) * star_gamma.comp_z.at(i, j);
            }
            out.comp_rho.at(i, j) = (star_dphi.comp_rho.at(i, j) + brho) * rho -
                                    dphi.comp_rho.at(i, j) * invl;
            out.comp_z.at(i, j) = (star_dphi.comp_z.at(i, j) + bz) * rho -
                                  phi_lambda.at(i, j) * (2.0 * lambda) -
                                  dphi.comp_z.at(i, j) * invl;
        }
    }
    return out;
}

MatrixOneForm bz_residual(const MatrixField& g, const MatrixField& phi,
                          const MatrixField& phi_lambda, cdouble lambda,
                          BzBracket bracket)
{
    return bz_residual(connection(g), phi, phi_lambda, lambda, bracket);
}

TracelessFunction TracelessFunction::linear(const Matrix2& m)
{
    TracelessFunction f;
    f.F = [m](cdouble s) { return m * s; };
    f.dF = [m](cdouble) { return m; };
    return f;
}

BzMapResult bz_map(const MatrixField& phi, const MatrixField& phi_lambda,
                   const TracelessFunction& f, cdouble lambda)
{
    require_lambda(lambda);
    if (phi.grid != phi_lambda.grid)
        throw GridMismatch("bz_map: grids differ");
    const Grid& g = phi.grid;
    const cdouble invl = 1.0 / lambda;

    BzMapResult out{MatrixField(g), MatrixField(g)};
    for (int i = 0; i < g.n_rho; ++i) {
        const double rho = g.rho(i);
        const cdouble s_lambda = -0.5 * rho * rho - 0.5 * invl * invl;
        for (int j = 0; j < g.n_z; ++j) {
            const cdouble s =
                g.z(j) - lambda * (0.5 * rho * rho) + 0.5 * invl;
            const Matrix2& P = phi.at(i, j);
            const Matrix2& Pl = phi_lambda.at(i, j);
            const Matrix2 Pinv = inverse(P);
            const Matrix2 T = f.F(s);
            const Matrix2 psi = P * T * Pinv;
            out.psi.at(i, j) = psi;
            out.psi_lambda.at(i, j) = Pl * T * Pinv +
                                      P * (f.dF(s) * s_lambda) * Pinv -
                                      psi * Pl * Pinv;
        }
    }
    return out;
}

} // namespace ernstlax
