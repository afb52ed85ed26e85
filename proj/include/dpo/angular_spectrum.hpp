#pragma once

// Closed-form eigenmodes of the angular operator J_phi on the two parity
// sectors, with normalization constants that make distinct modes orthonormal
// under the measure |cos phi|^{2 nu1} |sin phi|^{2 nu2} d phi on the circle.

#include "dpo/types.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace dpo::angular {

struct AngularMode {
    ParitySector sector;
    double l;      // integer (eps=+1) or half-odd (eps=-1) index
    int sign;      // +1 / -1 eigenvalue branch
    double lambda; // J_phi eigenvalue
    DunklParams params;
};

/// Eigenvalue of J_phi for the given sector, index and branch:
/// +-2 sqrt(l (l+nu1+nu2)) on eps=+1, +-2 sqrt((l+nu1)(l+nu2)) on eps=-1.
/// Throws lattice_error off the admissible index lattice.
double lambda_of(const ParitySector& sector, double l, int sign, const DunklParams& params);

/// Validated mode bundle (lattice check + eigenvalue).
AngularMode make_mode(const ParitySector& sector, double l, int sign, const DunklParams& params);

/// Mode value at angle phi. l=0 on eps=+1 is the real constant mode.
std::complex<double> eval_Phi(const AngularMode& mode, double phi);

struct ModeResidual {
    int N = 0;
    double residual = 0.0; // ||J Phi - lambda Phi||_inf / ||Phi||_inf
};

/// Applies the grid operator J_phi to the sampled closed form and measures
/// the eigen-residual.
ModeResidual verify_mode(const AngularMode& mode, int N);

/// Inner products <Phi_i, Phi_j> under the Dunkl angular measure, by
/// per-quadrant tanh-sinh quadrature (exact treatment of the |cos|,|sin|
/// weight singularities). Orthonormality holds iff this is the identity.
Eigen::MatrixXcd gram_matrix(const std::vector<AngularMode>& modes);

struct AbConstraint {
    bool ok = false;
    double residual = 0.0;     // |nu1 + eps nu2|
    std::string requirement;   // human-readable relation when violated
};

/// Flux-coupling admissibility of the parameters on a sector: requires
/// nu1 + eps nu2 = 0 (equivalently nu1 eps1 + nu2 eps2 = 0).
AbConstraint ab_constrain(const ParitySector& sector, const DunklParams& params);

} // namespace dpo::angular
