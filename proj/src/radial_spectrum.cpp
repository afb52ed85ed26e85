#include "dpo/radial_spectrum.hpp"

#include "dpo/angular_spectrum.hpp"
#include "dpo/quadrature.hpp"
#include "dpo/specfun.hpp"

#include <cmath>
#include <sstream>

namespace dpo::radial {

namespace {

// Laguerre data for the profile xi^{K+1/2} e^{-xi^2/2} L_n^K(xi^2): value and
// the first two t-derivatives of L_n^K at t = xi^2.
struct LagTriple {
    double g0 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
};

LagTriple laguerre_triple(int n, double K, double t) {
    LagTriple g;
    g.g0 = specfun::laguerre_L(n, K, t).value;
    if (n >= 1) g.g1 = -specfun::laguerre_L(n - 1, K + 1.0, t).value;
    if (n >= 2) g.g2 = specfun::laguerre_L(n - 2, K + 2.0, t).value;
    return g;
}

// Unnormalized shape and xi-derivatives.
RadialDerivatives shape_d(int n, double K, double xi) {
    const double p = K + 0.5;
    const double t = xi * xi;
    const auto g = laguerre_triple(n, K, t);
    const double damp = std::exp(-0.5 * t);
    const double w = (p - t) * g.g0 + 2.0 * t * g.g1;
    const double dw_over_2xi = -g.g0 + (p - t + 2.0) * g.g1 + 2.0 * t * g.g2;
    RadialDerivatives out;
    out.value = std::pow(xi, p) * damp * g.g0;
    out.d1 = std::pow(xi, p - 1.0) * damp * w;
    out.d2 = std::pow(xi, p - 2.0) * damp * ((p - 1.0 - t) * w + 2.0 * t * dw_over_2xi);
    return out;
}

double require_index(double K, const char* what) {
    if (!(K > -1.0)) {
        std::ostringstream msg;
        msg << what << " K=" << K << " is below the normalizability bound K > -1";
        throw branch_error(msg.str());
    }
    return K;
}

} // namespace

double delta_shift(const DunklParams& params) { return 0.5 + params.nu1 + params.nu2; }

double sector_identity_residual(const DunklParams& params, const ParitySector& sector) {
    const double d = delta_shift(params);
    const double lhs = d * (d - 1.0) - 2.0 * params.nu1 * params.nu2 * (1.0 - sector.eps());
    const double coupled = params.nu1 + sector.eps() * params.nu2;
    return std::abs(lhs - (coupled * coupled - 0.25));
}

double k_minus(double lambda, const DunklParams& params, const ParitySector& sector) {
    const double coupled = params.nu1 + sector.eps() * params.nu2;
    return std::sqrt(lambda * lambda + coupled * coupled);
}

double k_minus_reduced(double lambda, const FluxSpin& flux) {
    const double K = lambda * flux.m_s;
    if (!(K > 0.0)) {
        std::ostringstream msg;
        msg << "branch reduction needs lambda m_s > 0; got lambda=" << lambda
            << ", m_s=" << flux.m_s;
        throw branch_error(msg.str());
    }
    return K;
}

double k_plus(double lambda, const FluxSpin& flux, const DunklParams& params,
              const ParitySector& sector) {
    if (flux.vartheta == 0.0) return k_minus(lambda, params, sector);

    const auto gate = angular::ab_constrain(sector, params);
    if (!gate.ok) throw constraint_error(gate.requirement);

    const double Km = k_minus_reduced(lambda, flux);
    const double Kp = Km - flux.vartheta * flux.m_s;

    // direct quadratic form for K+^2, as a guard on the reduction
    const double coupled = params.nu1 + sector.eps() * params.nu2;
    const double spin_term = params.nu1 * sector.eps1 + params.nu2 * sector.eps2;
    const double direct = (flux.vartheta - lambda) * (flux.vartheta - lambda) +
                          coupled * coupled + 2.0 * flux.vartheta * spin_term * flux.m_s;
    if (std::abs(Kp * Kp - direct) > 1e-10 * std::max(1.0, std::abs(direct))) {
        std::ostringstream msg;
        msg << "outer index mismatch: (K-)- shift gives K+^2=" << Kp * Kp
            << " but the quadratic form gives " << direct;
        throw consistency_error(msg.str());
    }
    return require_index(Kp, "outer index");
}

double energy(int n, double K) {
    if (n < 0) throw lattice_error("radial level n must be nonnegative");
    require_index(K, "centrifugal index");
    return 2.0 * n + K + 1.0;
}

RadialMode make_radial_mode(Region region, int n, double lambda, const FluxSpin& flux,
                            const DunklParams& params, const ParitySector& sector) {
    RadialMode mode;
    mode.region = region;
    mode.n = n;
    if (region == Region::inner) {
        mode.K = (flux.vartheta != 0.0) ? k_minus_reduced(lambda, flux)
                                        : k_minus(lambda, params, sector);
    } else {
        mode.K = k_plus(lambda, flux, params, sector);
    }
    require_index(mode.K, "centrifugal index");
    mode.E = energy(n, mode.K);

    // enforce the unit L2(dxi) norm by quadrature of the bare shape
    const double cut = std::sqrt(2.0 * mode.E) + 10.0;
    const double mass = quad::tanh_sinh(
        [&](double xi) {
            const double v = shape_d(n, mode.K, xi).value;
            return v * v;
        },
        0.0, cut, 8);
    mode.norm = 1.0 / std::sqrt(mass);
    return mode;
}

double closed_form_norm(int n, double K) {
    const double ln = std::log(2.0) + specfun::ln_gamma(n + 1.0) - specfun::ln_gamma(n + K + 1.0);
    return std::exp(0.5 * ln);
}

double radial_eval(const RadialMode& mode, double xi) {
    if (xi == 0.0) return (mode.K + 0.5 > 0.0) ? 0.0 : throw branch_error("profile diverges at xi=0 for K <= -1/2");
    return mode.norm * shape_d(mode.n, mode.K, xi).value;
}

RadialDerivatives radial_eval_d(const RadialMode& mode, double xi) {
    if (!(xi > 0.0)) throw branch_error("derivatives need xi > 0");
    RadialDerivatives d = shape_d(mode.n, mode.K, xi);
    d.value *= mode.norm;
    d.d1 *= mode.norm;
    d.d2 *= mode.norm;
    return d;
}

double ode_residual(const RadialMode& mode, const std::vector<double>& xi_grid) {
    double worst = 0.0;
    double scale = 0.0;
    for (const double xi : xi_grid) {
        const auto d = radial_eval_d(mode, xi);
        const double potential =
            (mode.K * mode.K - 0.25) / (xi * xi) + xi * xi - 2.0 * mode.E;
        worst = std::max(worst, std::abs(d.d2 - potential * d.value));
        scale = std::max(scale, std::abs(d.value));
    }
    return worst / scale;
}

MatchingReport matching_report(int n, double lambda, const FluxSpin& flux,
                               const DunklParams& params, const ParitySector& sector, double R) {
    if (!(R > 0.0)) throw branch_error("matching radius must be positive");
    MatchingReport rep;
    rep.R = R;
    rep.k_minus = (flux.vartheta != 0.0) ? k_minus_reduced(lambda, flux)
                                         : k_minus(lambda, params, sector);
    rep.k_plus = k_plus(lambda, flux, params, sector);

    const auto inner = shape_d(n, rep.k_minus, R);
    const auto outer = shape_d(n, rep.k_plus, R);
    rep.amplitude_ratio = inner.value / outer.value;
    rep.leading_ratio = std::pow(R, rep.k_minus - rep.k_plus) *
                        std::exp(specfun::ln_gamma(n + rep.k_minus + 1.0) -
                                 specfun::ln_gamma(rep.k_minus + 1.0) -
                                 specfun::ln_gamma(n + rep.k_plus + 1.0) +
                                 specfun::ln_gamma(rep.k_plus + 1.0));

    // delta-shell jump condition: L+' - L-' = -(vartheta m_s / R) L at R
    const double jump = rep.amplitude_ratio * outer.d1 - inner.d1 +
                        (flux.vartheta * flux.m_s / R) * inner.value;
    rep.defect = jump / inner.value;
    return rep;
}

} // namespace dpo::radial
