#include "dpo/radial_ops.hpp"

#include <cmath>
#include <complex>

namespace dpo::dunkl {

namespace {

using Vec = Eigen::VectorXcd;

// 6th-order central first derivative; rows near the edges are left zero,
// residuals are only read on the interior margin anyway.
Vec diff6(const Vec& f, double h) {
    const int n = static_cast<int>(f.size());
    Vec out = Vec::Zero(n);
    const double c1 = 3.0 / 4.0, c2 = -3.0 / 20.0, c3 = 1.0 / 60.0;
    for (int i = 3; i < n - 3; ++i)
        out(i) = (c1 * (f(i + 1) - f(i - 1)) + c2 * (f(i + 2) - f(i - 2))
                  + c3 * (f(i + 3) - f(i - 3))) / h;
    return out;
}

} // namespace

TAlgebraReport check_T_algebra(const DunklParams& params, const ParitySector& sector,
                               const FluxSpin& flux, const TAlgebraOptions& opt) {
    const int N = opt.N;
    const double h = opt.r_max / N;
    Eigen::VectorXd r(N);
    for (int i = 0; i < N; ++i) r(i) = (i + 1) * h;

    const double delta = 0.5 + params.nu1 + params.nu2;
    const double S = params.nu1 * sector.eps1 + params.nu2 * sector.eps2;
    // scalar centrifugal block on the sector: angular eigenvalue, measure
    // shift, sector coupling and the flux-spin cross term
    const double Xs = (flux.vartheta - opt.lambda) * (flux.vartheta - opt.lambda)
                    + delta * (delta - 1.0)
                    - 2.0 * params.nu1 * params.nu2 * (1.0 - sector.eps())
                    + 2.0 * flux.vartheta * S * flux.m_s;

    const std::complex<double> I(0.0, 1.0);
    auto p = [&](const Vec& f) -> Vec {
        return -I * (diff6(f, h) + delta * f.cwiseQuotient(r.cast<std::complex<double>>()));
    };
    auto T1 = [&](const Vec& f) -> Vec {
        Vec rr = r.cast<std::complex<double>>();
        return 0.5 * (p(p(f)) + Xs * f.cwiseQuotient(rr.cwiseProduct(rr)));
    };
    auto T2 = [&](const Vec& f) -> Vec {
        return 0.5 * r.cwiseProduct(r).cast<std::complex<double>>().cwiseProduct(f);
    };
    auto T3 = [&](const Vec& f) -> Vec {
        Vec rc = r.cast<std::complex<double>>();
        return 0.5 * (rc.cwiseProduct(p(f)) + p(rc.cwiseProduct(f)));
    };

    // Gaussian bumps (optionally polynomial-weighted) well separated from
    // both ends of the grid.
    std::vector<Eigen::VectorXd> bank;
    for (double c : {0.35 * opt.r_max, 0.5 * opt.r_max}) {
        for (double w : {0.075 * opt.r_max, 0.125 * opt.r_max}) {
            Eigen::VectorXd g(N), g2(N);
            for (int i = 0; i < N; ++i) {
                const double z = (r(i) - c) / w;
                g(i) = std::exp(-z * z);
                g2(i) = r(i) * r(i) * g(i);
            }
            bank.push_back(g);
            bank.push_back(g2);
        }
    }

    const int margin = 20;
    auto rel_residual = [&](const Vec& lhs, const Vec& rhs) {
        double num = 0.0, den = 0.0;
        for (int i = margin; i < N - margin; ++i) {
            num = std::max(num, std::abs(lhs(i) - rhs(i)));
            den = std::max(den, std::abs(rhs(i)));
        }
        return num / std::max(den, 1e-300);
    };

    TAlgebraReport rep;
    for (const auto& gr : bank) {
        const Vec g = gr.cast<std::complex<double>>();
        const Vec c12 = T1(T2(g)) - T2(T1(g));
        const Vec c23 = T2(T3(g)) - T3(T2(g));
        const Vec c13 = T1(T3(g)) - T3(T1(g));
        rep.res_12 = std::max(rep.res_12, rel_residual(c12, Vec(-I * T3(g))));
        rep.res_23 = std::max(rep.res_23, rel_residual(c23, Vec(2.0 * I * T2(g))));
        rep.res_13 = std::max(rep.res_13, rel_residual(c13, Vec(-2.0 * I * T1(g))));
    }
    rep.max_residual = std::max({rep.res_12, rep.res_23, rep.res_13});
    rep.grid_adequate = rep.max_residual <= opt.tol;
    if (!rep.grid_adequate)
        rep.note = "residual above threshold: refine the grid (larger N) or enlarge r_max";
    return rep;
}

} // namespace dpo::dunkl
