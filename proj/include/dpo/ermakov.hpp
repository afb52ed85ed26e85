#pragma once

// Auxiliary amplitude dynamics for the driven oscillator: the Ermakov
// equation rho'' + (M'/M) rho' + Omega^2 rho = 1/(M^2 rho^3) integrated with
// an embedded Dormand-Prince 5(4) scheme, plus closed-form references for
// constant coefficients.

#include "dpo/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dpo::ermakov {

struct MassFrequencyProfile {
    std::string label;
    std::function<double(double)> M;
    std::function<double(double)> Mdot;
    std::function<double(double)> Omega;
};

MassFrequencyProfile constant_profile(double M0, double Omega0);
MassFrequencyProfile exponential_mass_profile(double M0, double gamma, double Omega0);
/// Omega^2(t) = Omega0^2 (1 + a cos(omega_d t)), |a| < 1 keeps it positive.
MassFrequencyProfile modulated_frequency_profile(double M0, double Omega0, double a,
                                                 double omega_d);
/// Monotone cubic (PCHIP) interpolation of sampled M and Omega on the uniform
/// grid t0 + k dt. Samples must be positive; node values are reproduced
/// exactly (checked at construction).
MassFrequencyProfile tabulated_profile(double t0, double dt, const std::vector<double>& M_samples,
                                       const std::vector<double>& Omega_samples);

struct ErmakovState {
    double rho = 1.0;
    double rhodot = 0.0;
};

struct ErmakovTrajectory {
    std::vector<double> t;
    std::vector<double> rho;
    std::vector<double> rhodot;
    long steps = 0;    // accepted steps
    long rejected = 0; // rejected trial steps
};

/// Integrates from times.front() through each requested time in order
/// (monotone increasing or decreasing). Throws consistency_error if the
/// amplitude collapses below 1e-8 or the step count explodes.
ErmakovTrajectory solve_ermakov(const MassFrequencyProfile& profile, ErmakovState init,
                                const std::vector<double>& times, double tol);

/// Stationary amplitude (M Omega)^{-1/2} of the constant-coefficient
/// equation.
double equilibrium_rho(double M0, double Omega0);

/// Closed-form constant-coefficient solution through (rho0, rhodot0):
/// rho(t) = sqrt(A cos^2 Omega t + 2B cos sin + C sin^2) with the Omega -> 0
/// free-expansion limit handled separately.
double pinney_oracle(double M0, double Omega0, double rho0, double rhodot0, double t);

/// Relative drift of Q = rhodot^2/2 + Omega^2 rho^2/2 + 1/(2 M^2 rho^2)
/// along the trajectory; Q is conserved exactly when M and Omega are
/// constant.
double invariant_drift(const MassFrequencyProfile& profile, const ErmakovTrajectory& traj);

} // namespace dpo::ermakov
