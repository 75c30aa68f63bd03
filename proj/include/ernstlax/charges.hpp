#pragma once

#include <map>
#include <optional>

#include "ernstlax/symmetry.hpp"

namespace ernstlax {

// The conserved-charge recursion
//   d Phi^(n+1) = rho * D Phi^(n) - 2 n Phi^(n) dz
// run forwards by path integration and backwards by solving its starred form
//   Phi_rho = (2n/rho) Phi - [A, Phi] + (1/rho) P_z
//   Phi_z   = -[B, Phi] - (1/rho) P_rho        (P = Phi^(n+1))
// as transport ODEs. Every step returns a certificate: forward steps the
// disagreement between the two path kinds (closedness of the right side),
// backward steps the off-seed-line residual of the z equation.

MatrixOneForm recursion_rhs(const MatrixField& g, const MatrixField& phi_n,
                            int n);
MatrixOneForm recursion_rhs(const MatrixOneForm& gamma,
                            const MatrixField& phi_n, int n);

// Coefficient of d(rho * D Phi^(n) - 2 n Phi^(n) dz); a conservation law on
// solutions, for every tower level.
MatrixField conservation_residual(const MatrixField& g,
                                  const MatrixField& phi_n, int n);
MatrixField conservation_residual(const MatrixOneForm& gamma,
                                  const MatrixField& phi_n, int n);

struct StepResult {
    MatrixField value;
    double certificate;
};

// Reference size of an O(h^2) certificate on this grid, used to turn the
// relative certificate_factor into an absolute threshold. The envelope
// constant is frozen from the curzon seed-B baseline at desk resolutions.
double certificate_envelope(const Grid& g, double scale);

// Integrates the recursion right side from the grid corner with the given
// base value. Throws NotClosed when the path-kind disagreement exceeds
// `tolerance` (pass infinity to only measure).
StepResult forward_step(const MatrixOneForm& gamma, const MatrixField& phi_n,
                        int n, const Matrix2& base_value, double tolerance);
StepResult forward_step(const MatrixField& g, const MatrixField& phi_n, int n,
                        const Matrix2& base_value, double tolerance);

// Solves the backward system for Phi^(n) given Phi^(n+1): classical RK4 along
// the base column (z direction), then RK4 along every row (rho direction),
// with cubic interpolation supplying midpoint coefficients. Throws
// Inconsistent when the certificate exceeds `tolerance`.
StepResult backward_step(const MatrixOneForm& gamma,
                         const MatrixField& phi_np1, int n,
                         const Matrix2& base_value, double tolerance);
StepResult backward_step(const MatrixField& g, const MatrixField& phi_np1,
                         int n, const Matrix2& base_value, double tolerance);

// Base value making the rho equation stationary at the base node:
//   2n V - rho0 [A(base), V] = -P_z(base).
// This is the balancing choice that reproduces the closed flat-background
// towers; it always exists for n < 0 away from accidental spectra.
std::optional<Matrix2> balancing_base_value(const MatrixOneForm& gamma,
                                            const MatrixField& phi_np1, int n);

struct TowerOptions {
    int n_min = -2;
    int n_max = 4;
    double certificate_factor = 10.0;     // in units of the h^2 envelope
    std::map<int, Matrix2> base_values;   // per-level overrides; forward
                                          // levels default to zero, backward
                                          // levels to the balancing choice
};

struct ChargeTower {
    Grid grid;
    int n_min{};
    int n_max{};
    std::vector<MatrixField> levels;      // index n - n_min
    std::vector<double> certificates;     // per level; seed entry holds the
                                          // symmetry-residual norm of the seed
    std::vector<Matrix2> base_values;
    std::string seed_provenance;

    const MatrixField& level(int n) const { return levels.at(n - n_min); }
    double certificate(int n) const { return certificates.at(n - n_min); }
    const Matrix2& base_value(int n) const { return base_values.at(n - n_min); }
};

// Seed admissibility (symmetry residual at tolerance) plus repeated forward
// and backward steps. Step errors are rethrown annotated with the level.
ChargeTower build_tower(const MatrixField& g, const MatrixField& seed,
                        const TowerOptions& opts = {},
                        const std::string& seed_provenance = "");

} // namespace ernstlax
