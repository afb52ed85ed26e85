#pragma once

// Pseudospectral representation of the angular Dunkl operators on the offset
// periodic grid phi_k = -pi + (k + 1/2) * 2pi/N. With N divisible by 4 both
// reflections act as exact index permutations and no node touches a pole of
// tan or cot.

#include "dpo/types.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace dpo::dunkl {

enum class AngularOp { B_phi, J_phi, R1, R2, identity };

struct AngularGridOperator {
    int N = 0;
    AngularOp label = AngularOp::identity;
    std::vector<double> phi;   // grid nodes
    Eigen::MatrixXcd mat;      // dense operator matrix
};

/// Offset grid nodes. Requires N divisible by 4 and N >= 32.
std::vector<double> offset_grid(int N);

/// Index permutations of the reflections on the offset grid:
/// R1 (phi -> pi - phi) and R2 (phi -> -phi).
std::vector<int> reflection_perm_r1(int N);
std::vector<int> reflection_perm_r2(int N);

/// Periodic spectral differentiation matrices (first and second derivative).
Eigen::MatrixXd trig_diff_matrix(int N);
Eigen::MatrixXd trig_diff2_matrix(int N);

/// Dense grid operator for the requested label at the given resolution.
AngularGridOperator angular_operator(AngularOp label, int N, const DunklParams& params);

struct JSquaredReport {
    int N = 0;
    double max_residual = 0.0;
    std::vector<std::string> battery_names;
    std::vector<double> residuals; // per battery function, inf norm
};

/// Residuals of the operator identity J^2 = 2 B + 2 nu1 nu2 (1 - R1 R2)
/// applied to the standard battery of smooth test functions.
JSquaredReport check_J_squared(const DunklParams& params, int N);

} // namespace dpo::dunkl
