#pragma once

// Finite-difference representation of the radial generators
//   T1 = (p_r^2 + X/r^2)/2,  T2 = r^2/2,  T3 = (r p_r + p_r r)/2
// with p_r = -i (d/dr + delta/r), used to measure their commutation relations
// on smooth interior test vectors.

#include "dpo/types.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace dpo::dunkl {

struct TAlgebraOptions {
    double r_max = 8.0;
    int N = 2000;
    double lambda = 2.0; // angular eigenvalue feeding the centrifugal scalar
    double tol = 1e-5;
};

struct TAlgebraReport {
    // inf-norm residuals, relative to the right-hand side, of
    // [T1,T2] = -i T3,   [T2,T3] = 2i T2,   [T1,T3] = -2i T1
    double res_12 = 0.0;
    double res_23 = 0.0;
    double res_13 = 0.0;
    double max_residual = 0.0;
    bool grid_adequate = true; // false when the discretization is too coarse
    std::string note;
};

/// Measures the structure constants of the radial generator triple on a bank
/// of interior Gaussian test vectors. The centrifugal block of T1 is replaced
/// by its scalar sector eigenvalue built from (params, sector, flux, lambda).
TAlgebraReport check_T_algebra(const DunklParams& params, const ParitySector& sector,
                               const FluxSpin& flux, const TAlgebraOptions& opt = {});

} // namespace dpo::dunkl
