#pragma once

#include <cstdint>

#include "ernstlax/forms.hpp"

namespace ernstlax {

// Seeded low-order trigonometric matrix field: a fixed analytic expression
// whose coefficients come from the seed, so the same field can be sampled on
// any grid of the same physical box. Entries are
//   sum_k c_k cos(a_k rho + p_k) cos(b_k z + q_k)
// with two modes per entry and wavenumbers of order one.
struct TrigField {
    static constexpr int modes = 2;
    double c[4][modes], a[4][modes], b[4][modes], p[4][modes], q[4][modes];

    explicit TrigField(std::uint64_t seed);

    Matrix2 value(double rho, double z) const;
    MatrixField sample(const Grid& g) const;
};

// Convenience: a smooth random 1-form (two independent trig fields).
MatrixOneForm trig_one_form(std::uint64_t seed, const Grid& g);

} // namespace ernstlax
