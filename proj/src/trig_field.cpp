#include "ernstlax/trig_field.hpp"

#include <cmath>
#include <random>

namespace ernstlax {

TrigField::TrigField(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> wave(0.5, 1.5);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    for (int e = 0; e < 4; ++e)
        for (int k = 0; k < modes; ++k) {
            c[e][k] = coeff(rng);
            a[e][k] = wave(rng) * (k + 1);
            b[e][k] = wave(rng) * (k + 1);
            p[e][k] = phase(rng);
            q[e][k] = phase(rng);
        }
}

Matrix2 TrigField::value(double rho, double z) const
{
    double e[4];
    for (int n = 0; n < 4; ++n) {
        e[n] = 0.0;
        for (int k = 0; k < modes; ++k)
            e[n] += c[n][k] * std::cos(a[n][k] * rho + p[n][k]) *
                    std::cos(b[n][k] * z + q[n][k]);
    }
    return {e[0], e[1], e[2], e[3]};
}

MatrixField TrigField::sample(const Grid& g) const
{
    MatrixField f(g);
    for (int i = 0; i < g.n_rho; ++i)
        for (int j = 0; j < g.n_z; ++j)
            f.at(i, j) = value(g.rho(i), g.z(j));
    return f;
}

MatrixOneForm trig_one_form(std::uint64_t seed, const Grid& g)
{
    return MatrixOneForm(TrigField(seed).sample(g),
                         TrigField(seed + 1).sample(g));
}

} // namespace ernstlax
