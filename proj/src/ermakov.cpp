#include "dpo/ermakov.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace dpo::ermakov {

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0)) {
        std::ostringstream msg;
        msg << what << " must be positive; got " << x;
        throw branch_error(msg.str());
    }
}

// Monotone cubic interpolation (Fritsch-Carlson slopes) on a uniform grid.
class Pchip {
  public:
    Pchip(double t0, double dt, std::vector<double> y) : t0_(t0), dt_(dt), y_(std::move(y)) {
        const int n = static_cast<int>(y_.size());
        if (n < 2) throw lattice_error("tabulated profile needs at least two samples");
        require_positive(dt_, "sample spacing");
        std::vector<double> s(n - 1);
        for (int k = 0; k + 1 < n; ++k) s[k] = (y_[k + 1] - y_[k]) / dt_;
        d_.assign(n, 0.0);
        for (int i = 1; i + 1 < n; ++i) {
            if (s[i - 1] * s[i] > 0.0) d_[i] = 2.0 * s[i - 1] * s[i] / (s[i - 1] + s[i]);
        }
        d_[0] = end_slope(s[0], n > 2 ? s[1] : s[0]);
        d_[n - 1] = end_slope(s[n - 2], n > 2 ? s[n - 3] : s[n - 2]);
    }

    double eval(double t) const { return hermite(t, false); }
    double deriv(double t) const { return hermite(t, true); }

  private:
    static double end_slope(double s_near, double s_far) {
        double d = (3.0 * s_near - s_far) / 2.0;
        if (d * s_near <= 0.0) return 0.0;
        if (s_near * s_far <= 0.0 && std::abs(d) > 3.0 * std::abs(s_near)) return 3.0 * s_near;
        return d;
    }

    double hermite(double t, bool want_deriv) const {
        const int n = static_cast<int>(y_.size());
        double u = (t - t0_) / dt_;
        u = std::clamp(u, 0.0, static_cast<double>(n - 1));
        const int i = std::min(static_cast<int>(u), n - 2);
        const double th = u - i;
        const double th2 = th * th;
        if (want_deriv) {
            const double dh00 = 6.0 * th2 - 6.0 * th;
            const double dh10 = 3.0 * th2 - 4.0 * th + 1.0;
            const double dh11 = 3.0 * th2 - 2.0 * th;
            return dh00 * (y_[i] - y_[i + 1]) / dt_ + dh10 * d_[i] + dh11 * d_[i + 1];
        }
        const double th3 = th2 * th;
        const double h00 = 2.0 * th3 - 3.0 * th2 + 1.0;
        const double h10 = th3 - 2.0 * th2 + th;
        const double h11 = th3 - th2;
        return h00 * y_[i] + (1.0 - h00) * y_[i + 1] + dt_ * (h10 * d_[i] + h11 * d_[i + 1]);
    }

    double t0_;
    double dt_;
    std::vector<double> y_;
    std::vector<double> d_;
};

struct Derivs {
    double drho;
    double drhodot;
};

Derivs rhs(const MassFrequencyProfile& p, double t, double rho, double rhodot) {
    const double M = p.M(t);
    const double Om = p.Omega(t);
    const double inv = 1.0 / (M * M * rho * rho * rho);
    return {rhodot, inv - (p.Mdot(t) / M) * rhodot - Om * Om * rho};
}

} // namespace

MassFrequencyProfile constant_profile(double M0, double Omega0) {
    require_positive(M0, "mass");
    if (Omega0 < 0.0) throw branch_error("frequency must be nonnegative");
    return {"constant", [M0](double) { return M0; }, [](double) { return 0.0; },
            [Omega0](double) { return Omega0; }};
}

MassFrequencyProfile exponential_mass_profile(double M0, double gamma, double Omega0) {
    require_positive(M0, "mass");
    if (Omega0 < 0.0) throw branch_error("frequency must be nonnegative");
    return {"exponential-mass",
            [M0, gamma](double t) { return M0 * std::exp(gamma * t); },
            [M0, gamma](double t) { return gamma * M0 * std::exp(gamma * t); },
            [Omega0](double) { return Omega0; }};
}

MassFrequencyProfile modulated_frequency_profile(double M0, double Omega0, double a,
                                                 double omega_d) {
    require_positive(M0, "mass");
    require_positive(Omega0, "carrier frequency");
    if (!(std::abs(a) < 1.0)) throw branch_error("modulation depth must satisfy |a| < 1");
    return {"modulated-frequency", [M0](double) { return M0; }, [](double) { return 0.0; },
            [Omega0, a, omega_d](double t) {
                return Omega0 * std::sqrt(1.0 + a * std::cos(omega_d * t));
            }};
}

MassFrequencyProfile tabulated_profile(double t0, double dt, const std::vector<double>& M_samples,
                                       const std::vector<double>& Omega_samples) {
    if (M_samples.size() != Omega_samples.size())
        throw lattice_error("mass and frequency tables must have equal length");
    for (const double m : M_samples) require_positive(m, "tabulated mass sample");
    for (const double w : Omega_samples) require_positive(w, "tabulated frequency sample");
    auto mass = std::make_shared<Pchip>(t0, dt, M_samples);
    auto freq = std::make_shared<Pchip>(t0, dt, Omega_samples);
    for (std::size_t k = 0; k < M_samples.size(); ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        if (std::abs(mass->eval(t) - M_samples[k]) > 1e-12 * std::abs(M_samples[k]))
            throw consistency_error("tabulated mass interpolant misses a node value");
        if (std::abs(freq->eval(t) - Omega_samples[k]) > 1e-12 * std::abs(Omega_samples[k]))
            throw consistency_error("tabulated frequency interpolant misses a node value");
    }
    return {"tabulated", [mass](double t) { return mass->eval(t); },
            [mass](double t) { return mass->deriv(t); },
            [freq](double t) { return freq->eval(t); }};
}

ErmakovTrajectory solve_ermakov(const MassFrequencyProfile& profile, ErmakovState init,
                                const std::vector<double>& times, double tol) {
    require_positive(init.rho, "initial amplitude");
    require_positive(tol, "tolerance");
    if (times.empty()) throw lattice_error("output grid is empty");
    const double dir = (times.size() > 1 && times.back() < times.front()) ? -1.0 : 1.0;
    for (std::size_t k = 1; k < times.size(); ++k) {
        if ((times[k] - times[k - 1]) * dir <= 0.0)
            throw lattice_error("output times must be strictly monotone");
    }

    // Dormand-Prince 5(4) tableau
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                        e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                        e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

    ErmakovTrajectory traj;
    traj.t.reserve(times.size());
    traj.rho.reserve(times.size());
    traj.rhodot.reserve(times.size());

    double t = times.front();
    double rho = init.rho;
    double rhodot = init.rhodot;
    traj.t.push_back(t);
    traj.rho.push_back(rho);
    traj.rhodot.push_back(rhodot);

    Derivs k1 = rhs(profile, t, rho, rhodot);
    double h = dir * 1e-3;
    const long max_steps = 2000000;

    for (std::size_t out = 1; out < times.size(); ++out) {
        const double target = times[out];
        while (dir * (target - t) > 0.0) {
            if (traj.steps + traj.rejected > max_steps)
                throw consistency_error("Ermakov step budget exhausted");
            if (dir * (t + h - target) > 0.0) h = target - t;

            auto stage = [&](double c, double r, double rd) { return rhs(profile, t + c * h, r, rd); };
            const Derivs k2 = stage(a21, rho + h * a21 * k1.drho, rhodot + h * a21 * k1.drhodot);
            const Derivs k3 = stage(3.0 / 10,
                                    rho + h * (a31 * k1.drho + a32 * k2.drho),
                                    rhodot + h * (a31 * k1.drhodot + a32 * k2.drhodot));
            const Derivs k4 =
                stage(4.0 / 5, rho + h * (a41 * k1.drho + a42 * k2.drho + a43 * k3.drho),
                      rhodot + h * (a41 * k1.drhodot + a42 * k2.drhodot + a43 * k3.drhodot));
            const Derivs k5 = stage(
                8.0 / 9,
                rho + h * (a51 * k1.drho + a52 * k2.drho + a53 * k3.drho + a54 * k4.drho),
                rhodot +
                    h * (a51 * k1.drhodot + a52 * k2.drhodot + a53 * k3.drhodot + a54 * k4.drhodot));
            const Derivs k6 =
                stage(1.0,
                      rho + h * (a61 * k1.drho + a62 * k2.drho + a63 * k3.drho + a64 * k4.drho +
                                 a65 * k5.drho),
                      rhodot + h * (a61 * k1.drhodot + a62 * k2.drhodot + a63 * k3.drhodot +
                                    a64 * k4.drhodot + a65 * k5.drhodot));

            const double rho_new =
                rho + h * (b1 * k1.drho + b3 * k3.drho + b4 * k4.drho + b5 * k5.drho + b6 * k6.drho);
            const double rhodot_new =
                rhodot + h * (b1 * k1.drhodot + b3 * k3.drhodot + b4 * k4.drhodot +
                              b5 * k5.drhodot + b6 * k6.drhodot);
            const Derivs k7 = rhs(profile, t + h, rho_new, rhodot_new);

            const double err_rho = h * (e1 * k1.drho + e3 * k3.drho + e4 * k4.drho +
                                        e5 * k5.drho + e6 * k6.drho + e7 * k7.drho);
            const double err_rhodot = h * (e1 * k1.drhodot + e3 * k3.drhodot + e4 * k4.drhodot +
                                           e5 * k5.drhodot + e6 * k6.drhodot + e7 * k7.drhodot);
            const double sc_rho = tol + tol * std::max(std::abs(rho), std::abs(rho_new));
            const double sc_rhodot = tol + tol * std::max(std::abs(rhodot), std::abs(rhodot_new));
            const double err = std::sqrt(0.5 * ((err_rho / sc_rho) * (err_rho / sc_rho) +
                                                (err_rhodot / sc_rhodot) * (err_rhodot / sc_rhodot)));

            if (err <= 1.0 && std::isfinite(rho_new) && std::isfinite(rhodot_new)) {
                t += h;
                rho = rho_new;
                rhodot = rhodot_new;
                k1 = k7; // first-same-as-last
                ++traj.steps;
                if (rho < 1e-8) {
                    std::ostringstream msg;
                    msg << "Ermakov amplitude collapsed below 1e-8 at t=" << t;
                    throw consistency_error(msg.str());
                }
            } else {
                ++traj.rejected;
            }
            const double fac =
                (err > 0.0) ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
            h *= fac;
            if (!std::isfinite(h) || h == 0.0)
                throw consistency_error("Ermakov step size degenerated");
        }
        traj.t.push_back(t);
        traj.rho.push_back(rho);
        traj.rhodot.push_back(rhodot);
    }
    return traj;
}

double equilibrium_rho(double M0, double Omega0) {
    require_positive(M0, "mass");
    require_positive(Omega0, "frequency");
    return 1.0 / std::sqrt(M0 * Omega0);
}

double pinney_oracle(double M0, double Omega0, double rho0, double rhodot0, double t) {
    require_positive(M0, "mass");
    require_positive(rho0, "initial amplitude");
    const double A = rho0 * rho0;
    if (Omega0 == 0.0) {
        const double B = rho0 * rhodot0;
        const double C = (1.0 / (M0 * M0) + B * B) / A;
        return std::sqrt(A + 2.0 * B * t + C * t * t);
    }
    const double B = rho0 * rhodot0 / Omega0;
    const double C = (1.0 / (M0 * M0 * Omega0 * Omega0) + B * B) / A;
    const double u = std::cos(Omega0 * t);
    const double v = std::sin(Omega0 * t);
    return std::sqrt(A * u * u + 2.0 * B * u * v + C * v * v);
}

double invariant_drift(const MassFrequencyProfile& profile, const ErmakovTrajectory& traj) {
    if (traj.t.empty()) throw lattice_error("empty trajectory");
    auto Q = [&](std::size_t k) {
        const double M = profile.M(traj.t[k]);
        const double Om = profile.Omega(traj.t[k]);
        const double rho = traj.rho[k];
        return 0.5 * traj.rhodot[k] * traj.rhodot[k] + 0.5 * Om * Om * rho * rho +
               0.5 / (M * M * rho * rho);
    };
    const double Q0 = Q(0);
    double worst = 0.0;
    for (std::size_t k = 1; k < traj.t.size(); ++k)
        worst = std::max(worst, std::abs(Q(k) - Q0) / std::abs(Q0));
    return worst;
}

} // namespace dpo::ermakov
