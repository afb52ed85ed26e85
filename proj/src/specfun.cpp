#include "dpo/specfun.hpp"

#include <cmath>
#include <limits>

namespace dpo::specfun {

namespace {

// Lanczos approximation, g = 7, 9 terms. Good to ~15 significant digits
// over the positive axis.
constexpr double kLanczos[] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kPi = 3.14159265358979323846;
constexpr double kLnSqrt2Pi = 0.91893853320467274178;

double lanczos_ln_gamma(double x) {
    // valid for x >= 0.5
    double acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x - 1.0 + k);
    const double t = x + 6.5; // x - 1 + g + 0.5
    return kLnSqrt2Pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: argument must be positive");
    if (x >= 0.5) return lanczos_ln_gamma(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), safe since 0 < x < 1/2
    return std::log(kPi / std::sin(kPi * x)) - lanczos_ln_gamma(1.0 - x);
}

PolyEval jacobi_P(int n, double a, double b, double x) {
    if (n < 0) throw std::domain_error("jacobi_P: degree must be >= 0");
    if (!(a > -1.0) || !(b > -1.0))
        throw std::domain_error("jacobi_P: parameters must be > -1");
    if (std::abs(x) > 1.0 + 1e-9)
        throw std::domain_error("jacobi_P: argument outside [-1, 1]");
    x = std::clamp(x, -1.0, 1.0);

    auto value = [](int m, double aa, double bb, double t) {
        if (m == 0) return 1.0;
        double ym1 = 1.0;
        double y = 0.5 * (aa - bb) + 0.5 * (aa + bb + 2.0) * t;
        for (int k = 2; k <= m; ++k) {
            const double s = 2.0 * k + aa + bb;
            const double c1 = 2.0 * k * (k + aa + bb) * (s - 2.0);
            const double c2 = (s - 1.0) * (aa * aa - bb * bb);
            const double c3 = (s - 2.0) * (s - 1.0) * s;
            const double c4 = 2.0 * (k + aa - 1.0) * (k + bb - 1.0) * s;
            const double yk = ((c2 + c3 * t) * y - c4 * ym1) / c1;
            ym1 = y;
            y = yk;
        }
        return y;
    };

    PolyEval out;
    out.degree = n;
    out.value = value(n, a, b, x);
    out.derivative = n == 0 ? 0.0
                            : 0.5 * (n + a + b + 1.0) * value(n - 1, a + 1.0, b + 1.0, x);
    return out;
}

PolyEval laguerre_L(int n, double alpha, double x) {
    if (n < 0) throw std::domain_error("laguerre_L: degree must be >= 0");
    if (!(alpha > -1.0)) throw std::domain_error("laguerre_L: alpha must be > -1");
    if (!(x >= 0.0)) throw std::domain_error("laguerre_L: argument must be >= 0");

    auto value = [](int m, double al, double t) {
        if (m == 0) return 1.0;
        double ym1 = 1.0;
        double y = 1.0 + al - t;
        for (int k = 2; k <= m; ++k) {
            const double yk = ((2.0 * k - 1.0 + al - t) * y - (k - 1.0 + al) * ym1) / k;
            ym1 = y;
            y = yk;
        }
        return y;
    };

    PolyEval out;
    out.degree = n;
    out.value = value(n, alpha, x);
    out.derivative = n == 0 ? 0.0 : -value(n - 1, alpha + 1.0, x);
    return out;
}

namespace {

bool near_integer(double v) { return std::abs(v - std::round(v)) < 1e-9; }

double guarded_ln_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("angular_norms: Gamma argument at a pole");
    return ln_gamma(x);
}

} // namespace

AngularNorms angular_norms(const ParitySector& sector, double l, const DunklParams& params) {
    const double nu1 = params.nu1, nu2 = params.nu2;
    const double s = nu1 + nu2;
    if (sector.eps() == +1) {
        if (l < 0 || !near_integer(l))
            throw lattice_error("angular_norms: eps=+1 needs integer l >= 0");
        if (l == 0) {
            // constant mode: single real term
            const double lnA = 0.5 * (guarded_ln_gamma(s + 1.0) - std::log(2.0)
                                      - guarded_ln_gamma(nu1 + 0.5)
                                      - guarded_ln_gamma(nu2 + 0.5));
            return {std::exp(lnA), 0.0};
        }
        const double common = std::log(2.0 * l + s) - std::log(2.0)
                              - guarded_ln_gamma(l + nu1 + 0.5)
                              - guarded_ln_gamma(l + nu2 + 0.5);
        const double lnA = 0.5 * (common + guarded_ln_gamma(l + s) + guarded_ln_gamma(l + 1.0));
        const double lnB = 0.5 * (common + guarded_ln_gamma(l + s + 1.0) + guarded_ln_gamma(l));
        return {std::exp(lnA), std::exp(lnB)};
    }
    if (!(l >= 0.5) || !near_integer(l - 0.5))
        throw lattice_error("angular_norms: eps=-1 needs half-odd l >= 1/2");
    const double common = std::log(2.0 * l + s) - std::log(2.0)
                          + guarded_ln_gamma(l + s + 0.5) + guarded_ln_gamma(l + 0.5);
    const double lnB = 0.5 * (common - guarded_ln_gamma(l + nu1 + 1.0) - guarded_ln_gamma(l + nu2));
    const double lnBp = 0.5 * (common - guarded_ln_gamma(l + nu1) - guarded_ln_gamma(l + nu2 + 1.0));
    return {std::exp(lnB), std::exp(lnBp)};
}

} // namespace dpo::specfun
