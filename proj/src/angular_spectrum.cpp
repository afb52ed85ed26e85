#include "dpo/angular_spectrum.hpp"

#include "dpo/angular_grid.hpp"
#include "dpo/quadrature.hpp"
#include "dpo/specfun.hpp"

#include <cmath>
#include <sstream>

namespace dpo::angular {

namespace {

constexpr double kLatticeTol = 1e-9;
constexpr double kInvSqrt2 = 0.70710678118654752440;

bool near_integer(double x) { return std::abs(x - std::round(x)) <= kLatticeTol; }

// Integer mode count for the sector: l itself on eps=+1, l-1/2 on eps=-1.
int lattice_index(const ParitySector& sector, double l) {
    const double m = (sector.eps() > 0) ? l : l - 0.5;
    if (!near_integer(m) || std::round(m) < 0.0) {
        std::ostringstream msg;
        msg << "angular index l=" << l << " is off the sector lattice ("
            << (sector.eps() > 0 ? "nonnegative integer" : "positive half-odd") << ")";
        throw lattice_error(msg.str());
    }
    return static_cast<int>(std::lround(m));
}

} // namespace

double lambda_of(const ParitySector& sector, double l, int sign, const DunklParams& params) {
    if (sign != 1 && sign != -1) throw lattice_error("branch sign must be +1 or -1");
    const int m = lattice_index(sector, l);
    if (sector.eps() > 0) {
        if (m == 0) return 0.0; // constant mode, degenerate branch
        const double rad = l * (l + params.nu1 + params.nu2);
        return sign * 2.0 * std::sqrt(rad);
    }
    const double rad = (l + params.nu1) * (l + params.nu2);
    return sign * 2.0 * std::sqrt(rad);
}

AngularMode make_mode(const ParitySector& sector, double l, int sign, const DunklParams& params) {
    return AngularMode{sector, l, sign, lambda_of(sector, l, sign, params), params};
}

std::complex<double> eval_Phi(const AngularMode& mode, double phi) {
    const double nu1 = mode.params.nu1;
    const double nu2 = mode.params.nu2;
    const double z = -std::cos(2.0 * phi);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const auto norms = specfun::angular_norms(mode.sector, mode.l, mode.params);

    if (mode.sector.eps() > 0) {
        const int l = lattice_index(mode.sector, mode.l);
        if (l == 0) return {norms.a, 0.0};
        const double even = norms.a * specfun::jacobi_P(l, nu1 - 0.5, nu2 - 0.5, z).value;
        const double odd =
            norms.b * s * c * specfun::jacobi_P(l - 1, nu1 + 0.5, nu2 + 0.5, z).value;
        // branch sign=+1 pairs with the +i component on this sector
        return {kInvSqrt2 * even, kInvSqrt2 * mode.sign * odd};
    }

    const int m = lattice_index(mode.sector, mode.l);
    const double even = norms.a * c * specfun::jacobi_P(m, nu1 + 0.5, nu2 - 0.5, z).value;
    const double odd = norms.b * s * specfun::jacobi_P(m, nu1 - 0.5, nu2 + 0.5, z).value;
    // branch sign=+1 pairs with the -i component on this sector
    return {kInvSqrt2 * even, -kInvSqrt2 * mode.sign * odd};
}

ModeResidual verify_mode(const AngularMode& mode, int N) {
    const auto op = dunkl::angular_operator(dunkl::AngularOp::J_phi, N, mode.params);
    Eigen::VectorXcd f(N);
    for (int k = 0; k < N; ++k) f(k) = eval_Phi(mode, op.phi[k]);
    const Eigen::VectorXcd res = op.mat * f - mode.lambda * f;
    const double scale = f.cwiseAbs().maxCoeff();
    return ModeResidual{N, res.cwiseAbs().maxCoeff() / scale};
}

namespace {

// One eighth of the circle, parametrized by the distance x in (0, pi/4) from
// the nearest quadrant boundary so the weight singularity sits at x = 0 in
// exact arithmetic. sin_at_zero marks which weight factor vanishes at x = 0.
struct Octant {
    double base;
    double dir;
    bool sin_at_zero;
};

constexpr double kQuarterPi = 0.78539816339744830962;
constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kPi = 3.14159265358979323846;

constexpr Octant kOctants[8] = {
    {0.0, +1.0, true},      {kHalfPi, -1.0, false}, {kHalfPi, +1.0, false},
    {kPi, -1.0, true},      {0.0, -1.0, true},      {-kHalfPi, +1.0, false},
    {-kHalfPi, -1.0, false}, {-kPi, +1.0, true},
};

} // namespace

Eigen::MatrixXcd gram_matrix(const std::vector<AngularMode>& modes) {
    const int n = static_cast<int>(modes.size());
    Eigen::MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double nu1 = modes[i].params.nu1;
            const double nu2 = modes[i].params.nu2;
            auto part = [&](bool imag_part) {
                double total = 0.0;
                for (const auto& oc : kOctants) {
                    total += quad::tanh_sinh(
                        [&](double x) {
                            const double sx = std::sin(x);
                            const double cx = std::cos(x);
                            const double w =
                                oc.sin_at_zero
                                    ? std::pow(cx, 2.0 * nu1) * std::pow(sx, 2.0 * nu2)
                                    : std::pow(sx, 2.0 * nu1) * std::pow(cx, 2.0 * nu2);
                            const double phi = oc.base + oc.dir * x;
                            const std::complex<double> v =
                                std::conj(eval_Phi(modes[i], phi)) * eval_Phi(modes[j], phi);
                            return w * (imag_part ? v.imag() : v.real());
                        },
                        0.0, kQuarterPi);
                }
                return total;
            };
            G(i, j) = {part(false), part(true)};
            if (j != i) G(j, i) = std::conj(G(i, j));
        }
    }
    return G;
}

AbConstraint ab_constrain(const ParitySector& sector, const DunklParams& params) {
    AbConstraint out;
    out.residual = std::abs(params.nu1 + sector.eps() * params.nu2);
    out.ok = out.residual <= 1e-12;
    if (!out.ok) {
        std::ostringstream msg;
        msg << "flux coupling requires nu1 " << (sector.eps() > 0 ? "+" : "-")
            << " nu2 = 0 on this sector; got " << params.nu1 + sector.eps() * params.nu2;
        out.requirement = msg.str();
    }
    return out;
}

} // namespace dpo::angular
