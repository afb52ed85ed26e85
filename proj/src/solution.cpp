#include "dpo/solution.hpp"

#include "dpo/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace dpo::solution {

namespace {

double profile_cut(const radial::RadialMode& mode) { return std::sqrt(2.0 * mode.E) + 10.0; }

} // namespace

StateSpec make_state(const DunklParams& params, const ParitySector& sector, const FluxSpin& flux,
                     double l, int sign, int n) {
    StateSpec st{params, sector, flux, angular::make_mode(sector, l, sign, params),
                 radial::RadialMode{}, radial::delta_shift(params)};
    const auto region = (flux.vartheta != 0.0) ? radial::Region::outer : radial::Region::inner;
    st.radial = radial::make_radial_mode(region, n, st.mode.lambda, flux, params, sector);
    return st;
}

RadialMoments radial_moments(const radial::RadialMode& mode) {
    const double cut = profile_cut(mode);
    auto integrate = [&](auto f) { return quad::tanh_sinh(f, 0.0, cut, 8); };
    RadialMoments m;
    m.J_kin = integrate([&](double xi) {
        const double d1 = radial::radial_eval_d(mode, xi).d1;
        return d1 * d1;
    });
    m.J_cent = integrate([&](double xi) {
        const double v = radial::radial_eval(mode, xi);
        return v * v / (xi * xi);
    });
    m.J_mom = integrate([&](double xi) {
        const double v = radial::radial_eval(mode, xi);
        return v * v * xi * xi;
    });
    return m;
}

namespace {

double uniform_step(const std::vector<double>& times) {
    if (times.size() < 3) throw lattice_error("phase accumulation needs at least three times");
    const double h = times[1] - times[0];
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (std::abs((times[k] - times[k - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw lattice_error("phase accumulation needs a uniform time grid");
    }
    return h;
}

} // namespace

PhaseRecord lr_phase(double E, const ermakov::ErmakovTrajectory& traj,
                     const ermakov::MassFrequencyProfile& profile) {
    const double h = uniform_step(traj.t);

    PhaseRecord rec;
    rec.t = traj.t;
    rec.rho = traj.rho;
    rec.rhodot = traj.rhodot;

    const std::size_t n = traj.t.size();
    std::vector<double> freq(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double M = profile.M(traj.t[k]);
        const double rho = traj.rho[k];
        freq[k] = -E / (M * rho * rho);
    }
    rec.eta = quad::cumulative_simpson(freq, h);
    return rec;
}

PhaseRecord phase_split(const StateSpec& state, const ermakov::ErmakovTrajectory& traj,
                        const ermakov::MassFrequencyProfile& profile) {
    PhaseRecord rec = lr_phase(state.radial.E, traj, profile);
    const double h = uniform_step(traj.t);
    const auto mom = radial_moments(state.radial);
    const double K = state.radial.K;

    const std::size_t n = traj.t.size();
    rec.H_exp.resize(n);
    std::vector<double> neg_H(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double M = profile.M(traj.t[k]);
        const double Om = profile.Omega(traj.t[k]);
        const double rho = traj.rho[k];
        const double rhodot = traj.rhodot[k];
        rec.H_exp[k] = (mom.J_kin + (K * K - 0.25) * mom.J_cent) / (2.0 * M * rho * rho) +
                       (0.5 * M * Om * Om * rho * rho + 0.5 * M * rhodot * rhodot) * mom.J_mom;
        neg_H[k] = -rec.H_exp[k];
    }
    rec.eta_dyn = quad::cumulative_simpson(neg_H, h);
    rec.eta_geo.resize(n);
    for (std::size_t k = 0; k < n; ++k) rec.eta_geo[k] = rec.eta[k] - rec.eta_dyn[k];
    return rec;
}

PhaseRecord evolve_phase(const StateSpec& state, const ermakov::MassFrequencyProfile& profile,
                         ermakov::ErmakovState init, const std::vector<double>& times,
                         double ode_tol) {
    uniform_step(times);
    const auto traj = ermakov::solve_ermakov(profile, init, times, ode_tol);
    return phase_split(state, traj, profile);
}

std::complex<double> unitary_factor(double M, double rho, double rhodot, double r) {
    const std::complex<double> i(0.0, 1.0);
    return std::exp(i * (M * rhodot * r * r / (2.0 * rho)));
}

PsiValue eval_psi(const StateSpec& state, double eta, double M, double rho, double rhodot,
                  double r, double phi) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> phase = std::exp(i * eta) * unitary_factor(M, rho, rhodot, r);
    const double scaled = radial::radial_eval(state.radial, r / rho);
    const double radial_part = std::pow(rho, -0.5) * std::pow(r, -state.delta) * scaled;
    const std::complex<double> value = phase * radial_part * angular::eval_Phi(state.mode, phi);
    if (state.flux.m_s > 0) return {value, {0.0, 0.0}};
    return {{0.0, 0.0}, value};
}

double psi_norm(const StateSpec& state, double M, double rho, double rhodot) {
    const double cut = profile_cut(state.radial) * rho;
    const double two_delta = 2.0 * state.delta;
    const double radial_mass = quad::tanh_sinh(
        [&](double r) {
            const std::complex<double> f = unitary_factor(M, rho, rhodot, r) *
                                           std::pow(rho, -0.5) * std::pow(r, -state.delta) *
                                           radial::radial_eval(state.radial, r / rho);
            return std::norm(f) * std::pow(r, two_delta);
        },
        0.0, cut, 8);
    const auto G = angular::gram_matrix({state.mode});
    return std::sqrt(radial_mass * G(0, 0).real());
}

} // namespace dpo::solution
