#pragma once

#include <functional>

#include "ernstlax/charges.hpp"

namespace ernstlax {

// Psi represented by its Laurent coefficients: Psi(lambda) =
// sum_n lambda^n Phi^(n) over the tower range. The lambda derivative is
// term-wise and therefore exact for the finite sum.
struct SpectralFunction {
    ChargeTower tower;
};

// lambda^n by a left-to-right product loop (deterministic, |n| is small).
cdouble ipow(cdouble lambda, int n);

MatrixField evaluate_psi(const SpectralFunction& s, cdouble lambda);
MatrixField evaluate_psi_lambda(const SpectralFunction& s, cdouble lambda);

// Residual 1-form of  rho * D Psi - 2 lambda Psi_lambda dz - (1/lambda) d Psi
// for a standalone (Psi, Psi_lambda) pair.
MatrixOneForm lax_residual_fields(const MatrixOneForm& gamma,
                                  const MatrixField& psi,
                                  const MatrixField& psi_lambda,
                                  cdouble lambda);
MatrixOneForm lax_residual_exterior(const MatrixField& g,
                                    const SpectralFunction& s, cdouble lambda);

// The same residuals as the component pair
//   eq1 = rho D_rho Psi - 2 lambda Psi_lambda - (1/lambda) Psi_z
//   eq2 = rho D_z Psi + (1/lambda) Psi_rho
// The exterior residual is (-eq2) drho + eq1 dz, bit for bit.
struct LaxComponents {
    MatrixField eq1;
    MatrixField eq2;
};
LaxComponents lax_residual_components(const MatrixOneForm& gamma,
                                      const MatrixField& psi,
                                      const MatrixField& psi_lambda,
                                      cdouble lambda);

// Residual of the starred form
//   *d Psi + lambda rho (d Psi + [gamma, Psi]) - 2 lambda^2 Psi_lambda drho,
// algebraically -lambda * star of the exterior residual.
MatrixOneForm star_form_residual(const MatrixOneForm& gamma,
                                 const MatrixField& psi,
                                 const MatrixField& psi_lambda,
                                 cdouble lambda);
MatrixOneForm star_form_residual(const MatrixField& g,
                                 const SpectralFunction& s, cdouble lambda);

// s = z - lambda rho^2 / 2 + 1/(2 lambda) and its two annihilation residuals
//   L1 s = rho s_rho - 2 lambda s_lambda - (1/lambda) s_z
//   L2 s = rho s_z + (1/lambda) s_rho
// with s_lambda analytic (= -rho^2/2 - 1/(2 lambda^2)).
struct SpectralInvariant {
    ScalarField s;
    ScalarField L1;
    ScalarField L2;
};
SpectralInvariant spectral_invariant(const Grid& grid, cdouble lambda);

// Bracket convention for the B-Z variant system; the paper's "[*gamma Phi]"
// is read as left multiplication, the commutator is kept as a switch.
enum class BzBracket { left, commutator };

// Residual of  rho (*d Phi + <*gamma, Phi>) - 2 lambda Phi_lambda dz
//            - (1/lambda) d Phi.
MatrixOneForm bz_residual(const MatrixOneForm& gamma, const MatrixField& phi,
                          const MatrixField& phi_lambda, cdouble lambda,
                          BzBracket bracket = BzBracket::left);
MatrixOneForm bz_residual(const MatrixField& g, const MatrixField& phi,
                          const MatrixField& phi_lambda, cdouble lambda,
                          BzBracket bracket = BzBracket::left);

// Traceless matrix function of one complex argument, with derivative.
struct TracelessFunction {
    std::function<Matrix2(cdouble)> F;
    std::function<Matrix2(cdouble)> dF;

    // F(s) = s M for a constant traceless M.
    static TracelessFunction linear(const Matrix2& m);
};

// Psi = Phi F(s) Phi^{-1} evaluated per node, together with its lambda
// derivative (Phi_lambda supplied, s differentiated analytically).
struct BzMapResult {
    MatrixField psi;
    MatrixField psi_lambda;
};
BzMapResult bz_map(const MatrixField& phi, const MatrixField& phi_lambda,
                   const TracelessFunction& f, cdouble lambda);

} // namespace ernstlax
