#include "ernstlax/grid.hpp"

#include <string>

namespace ernstlax {

Grid make_grid(double rho_min, double rho_max, double z_min, double z_max,
               int n_rho, int n_z)
{
    if (rho_min <= 0.0)
        throw AxisViolation("rho_min = " + std::to_string(rho_min) +
                            " must be positive (rho = 0 is singular)");
    if (rho_max <= rho_min || z_max <= z_min)
        throw DegenerateGrid("grid bounds are not increasing");
    if (n_rho < 9 || n_z < 9)
        throw DegenerateGrid("need at least 9 nodes per direction, got " +
                             std::to_string(n_rho) + "x" + std::to_string(n_z));
    Grid g;
    g.rho_min = rho_min;
    g.rho_max = rho_max;
    g.z_min = z_min;
    g.z_max = z_max;
    g.n_rho = n_rho;
    g.n_z = n_z;
    g.h_rho = (rho_max - rho_min) / (n_rho - 1);
    g.h_z = (z_max - z_min) / (n_z - 1);
    return g;
}

Grid refine(const Grid& g, int factor)
{
    return make_grid(g.rho_min, g.rho_max, g.z_min, g.z_max,
                     factor * (g.n_rho - 1) + 1, factor * (g.n_z - 1) + 1);
}

} // namespace ernstlax
