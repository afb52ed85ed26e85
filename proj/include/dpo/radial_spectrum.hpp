#pragma once

// Radial eigenproblem in the similarity-transformed gauge: effective
// Schroedinger operator -d^2/dxi^2 + (K^2-1/4)/xi^2 + xi^2 with spectrum
// 2E = 2(2n + K + 1). Inner (r < R) and outer (r > R) regions differ by the
// flux shift of the centrifugal index K.

#include "dpo/types.hpp"

#include <vector>

namespace dpo::radial {

/// Similarity exponent delta = 1/2 + nu1 + nu2 that removes the first-order
/// Dunkl term from the radial kinetic operator.
double delta_shift(const DunklParams& params);

/// Residual of the centrifugal bookkeeping identity
/// delta(delta-1) - 2 nu1 nu2 (1-eps) = (nu1 + eps nu2)^2 - 1/4.
double sector_identity_residual(const DunklParams& params, const ParitySector& sector);

/// Inner centrifugal index K- = sqrt(lambda^2 + (nu1 + eps nu2)^2).
double k_minus(double lambda, const DunklParams& params, const ParitySector& sector);

/// Branch reduction K- = lambda m_s, valid when lambda m_s > 0
/// (throws branch_error otherwise).
double k_minus_reduced(double lambda, const FluxSpin& flux);

/// Outer centrifugal index K+ = K- - vartheta m_s. Requires the flux-coupling
/// constraint nu1 + eps nu2 = 0 when vartheta != 0 (constraint_error), the
/// branch admissibility lambda m_s > 0 (branch_error), agreement of K+^2 with
/// the direct quadratic form within 1e-10 (consistency_error), and K+ > -1
/// for normalizability (branch_error).
double k_plus(double lambda, const FluxSpin& flux, const DunklParams& params,
              const ParitySector& sector);

/// Oscillator level E = 2n + K + 1 (exact in floating point for
/// representable K).
double energy(int n, double K);

enum class Region { inner, outer };

struct RadialMode {
    Region region = Region::inner;
    int n = 0;
    double K = 0.0;    // centrifugal index of the region
    double E = 0.0;    // 2n + K + 1
    double norm = 0.0; // numerically enforced L2(dxi) unit norm factor
};

/// Assembled mode for one region. lambda/flux/params/sector fix K via
/// k_minus / k_plus; the norm is enforced by quadrature at construction.
RadialMode make_radial_mode(Region region, int n, double lambda, const FluxSpin& flux,
                            const DunklParams& params, const ParitySector& sector);

/// Closed-form unit-norm prefactor sqrt(2 n! / Gamma(n+K+1)), kept for
/// cross-checks against the quadrature-enforced norm.
double closed_form_norm(int n, double K);

/// Profile value norm * xi^{K+1/2} exp(-xi^2/2) L_n^K(xi^2).
double radial_eval(const RadialMode& mode, double xi);

struct RadialDerivatives {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Value and first two derivatives from Laguerre recurrences (no finite
/// differences), for residual and matching diagnostics.
RadialDerivatives radial_eval_d(const RadialMode& mode, double xi);

/// max_i |L'' - ((K^2-1/4)/xi^2 + xi^2 - 2E) L| / max_i |L| over the grid.
double ode_residual(const RadialMode& mode, const std::vector<double>& xi_grid);

struct MatchingReport {
    double R = 0.0;
    double k_minus = 0.0;
    double k_plus = 0.0;
    double amplitude_ratio = 0.0; // outer/inner amplitude from continuity
    double leading_ratio = 0.0;   // small-R amplitude prediction
    double defect = 0.0;          // relative derivative-jump mismatch
};

/// Matches inner and outer profiles of the same level n at radius R:
/// amplitudes by continuity, and the derivative jump tested against the
/// delta-shell condition L+' - L-' = -(vartheta m_s / R) L.
MatchingReport matching_report(int n, double lambda, const FluxSpin& flux,
                               const DunklParams& params, const ParitySector& sector, double R);

} // namespace dpo::radial
