#pragma once

// Full time-dependent state assembly: invariant eigenmode, auxiliary
// amplitude rho(t), squeeze factor exp(i M rhodot r^2 / (2 rho)), and the
// accumulated phase eta(t) = -E int dt'/(M rho^2) with its dynamical /
// geometric decomposition.

#include "dpo/angular_spectrum.hpp"
#include "dpo/ermakov.hpp"
#include "dpo/radial_spectrum.hpp"
#include "dpo/types.hpp"

#include <complex>
#include <vector>

namespace dpo::solution {

struct StateSpec {
    DunklParams params;
    ParitySector sector;
    FluxSpin flux;
    angular::AngularMode mode;
    radial::RadialMode radial;
    double delta = 0.0; // similarity exponent used in the r^{-delta} factor
};

/// Validates the quantum numbers, applies the flux-coupling constraint when
/// vartheta != 0, and assembles the mode pair. With flux the radial index is
/// the shifted (outer) one, which governs all r > 0 in the zero-radius shell
/// limit.
StateSpec make_state(const DunklParams& params, const ParitySector& sector, const FluxSpin& flux,
                     double l, int sign, int n);

struct RadialMoments {
    double J_kin = 0.0;  // int (dL/dxi)^2 dxi
    double J_cent = 0.0; // int xi^{-2} L^2 dxi
    double J_mom = 0.0;  // int xi^2 L^2 dxi
};

/// Quadrature moments of the unit-norm radial profile that enter <H>.
RadialMoments radial_moments(const radial::RadialMode& mode);

struct PhaseRecord {
    std::vector<double> t;
    std::vector<double> rho;
    std::vector<double> rhodot;
    std::vector<double> H_exp;   // <H>(t) in the mode
    std::vector<double> eta;     // accumulated phase
    std::vector<double> eta_dyn; // -int <H> dt'
    std::vector<double> eta_geo; // eta - eta_dyn
};

/// Accumulated phase eta(t) = -E int dt'/(M rho^2) on the trajectory's own
/// (uniform) grid by composite Simpson sums. Only t/rho/rhodot/eta are
/// filled; use phase_split for the decomposition.
PhaseRecord lr_phase(double E, const ermakov::ErmakovTrajectory& traj,
                     const ermakov::MassFrequencyProfile& profile);

/// lr_phase plus the dynamical part eta_dyn = -int <H> dt' (radial quadrature
/// moments times the instantaneous coefficients) and the geometric remainder
/// eta_geo = eta - eta_dyn.
PhaseRecord phase_split(const StateSpec& state, const ermakov::ErmakovTrajectory& traj,
                        const ermakov::MassFrequencyProfile& profile);

/// Integrates the auxiliary amplitude on the (uniform) output grid and hands
/// the trajectory to phase_split.
PhaseRecord evolve_phase(const StateSpec& state, const ermakov::MassFrequencyProfile& profile,
                         ermakov::ErmakovState init, const std::vector<double>& times,
                         double ode_tol);

/// Local squeeze factor exp(i M rhodot r^2 / (2 rho)).
std::complex<double> unitary_factor(double M, double rho, double rhodot, double r);

struct PsiValue {
    std::complex<double> up;
    std::complex<double> down;
};

/// Assembled two-component state at (r, phi) for the instantaneous
/// (eta, M, rho, rhodot); the spin projection selects the component.
PsiValue eval_psi(const StateSpec& state, double eta, double M, double rho, double rhodot,
                  double r, double phi);

/// Norm of the assembled state under the plane measure
/// |x|^{2 nu1} |y|^{2 nu2} dx dy, by radial tanh-sinh quadrature times the
/// angular Gram diagonal. Equals 1 for all t when the assembly is right.
double psi_norm(const StateSpec& state, double M, double rho, double rhodot);

} // namespace dpo::solution
