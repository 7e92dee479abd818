#pragma once

#include <string>
#include <vector>

#include "fracmom/distributions.hpp"
#include "fracmom/moments.hpp"

namespace fracmom {

// One row of the operator-versus-moment table.
struct IdentityCheck {
    std::string identity;  // rl, marchaud, riesz-derivative, riesz-integral
    std::string side;      // plus, minus or both
    Complex gamma;
    Complex operator_value;
    Complex moment_value;
    double rel_deviation = 0.0;
    double tolerance = 1e-4;
    bool passed = false;
    std::string error;  // set when a numerical routine threw
};

// RL integrals and Marchaud derivatives of the exact CF at zero on the grid
// rho + i k delta (|k| <= m), and Riesz operators at gamma in {0.25, 0.5, 0.75},
// each compared with the moment obtained by quadrature of the density.
std::vector<IdentityCheck> identity_suite(const DistributionSpec& spec, double rho = 0.4, double delta = 0.4,
                                          int m = 5, double tolerance = 1e-4);

}  // namespace fracmom
