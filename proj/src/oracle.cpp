#include "dpo/oracle.hpp"

#include "dpo/angular_grid.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dpo::oracle {

RadialGrid make_radial_grid(int N, double xi_max) {
    if (N < 16) throw lattice_error("radial grid needs at least 16 cells");
    if (!(xi_max > 0.0)) throw lattice_error("radial grid needs xi_max > 0");
    return RadialGrid{N, xi_max, xi_max / N};
}

Tridiagonal radial_operator(double K, const RadialGrid& grid) {
    const int n = grid.N - 1;
    Tridiagonal T;
    T.diag.resize(n);
    T.offdiag.assign(n - 1, -1.0 / (grid.h * grid.h));
    const double centrifugal = K * K - 0.25;
    for (int i = 0; i < n; ++i) {
        const double xi = (i + 1) * grid.h;
        T.diag[i] = 2.0 / (grid.h * grid.h) + centrifugal / (xi * xi) + xi * xi;
    }
    return T;
}

std::vector<double> eig_sym_tridiagonal(std::vector<double> diag, std::vector<double> offdiag) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return {};
    if (offdiag.size() + 1 != diag.size())
        throw lattice_error("offdiagonal length must be one less than the diagonal");
    offdiag.resize(n, 0.0);

    // implicit-shift QL sweeps, eigenvalues only
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(offdiag[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw consistency_error("QL iteration failed to converge");
                double g = (diag[l + 1] - diag[l]) / (2.0 * offdiag[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + offdiag[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                int i = m - 1;
                bool underflow = false;
                for (; i >= l; --i) {
                    double f = s * offdiag[i];
                    const double b = c * offdiag[i];
                    r = std::hypot(f, g);
                    offdiag[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        offdiag[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                diag[l] -= p;
                offdiag[l] = g;
                offdiag[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

namespace {

// (T - sigma I) x = b by banded LU with partial pivoting (one fill diagonal)
std::vector<double> shifted_solve(const Tridiagonal& T, double sigma,
                                  std::vector<double> b) {
    const int n = static_cast<int>(T.diag.size());
    std::vector<double> d(n), u(n, 0.0), w(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = T.diag[i] - sigma;
    for (int i = 0; i + 1 < n; ++i) u[i] = T.offdiag[i];

    for (int k = 0; k + 1 < n; ++k) {
        double colk = T.offdiag[k]; // row k+1, column k
        if (std::abs(colk) > std::abs(d[k])) {
            std::swap(b[k], b[k + 1]);
            const double dk = d[k];
            const double uk = u[k];
            const double wk = w[k];
            d[k] = colk;
            u[k] = d[k + 1];
            w[k] = u[k + 1];
            colk = dk;
            d[k + 1] = uk;
            u[k + 1] = wk;
        }
        if (d[k] == 0.0) d[k] = 1e-300;
        const double m = colk / d[k];
        d[k + 1] -= m * u[k];
        u[k + 1] -= m * w[k];
        b[k + 1] -= m * b[k];
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;

    std::vector<double> x(n);
    x[n - 1] = b[n - 1] / d[n - 1];
    if (n >= 2) x[n - 2] = (b[n - 2] - u[n - 2] * x[n - 1]) / d[n - 2];
    for (int k = n - 3; k >= 0; --k)
        x[k] = (b[k] - u[k] * x[k + 1] - w[k] * x[k + 2]) / d[k];
    return x;
}

} // namespace

EigenCertificate tridiag_eigenvector(const Tridiagonal& T, double value) {
    const int n = static_cast<int>(T.diag.size());
    if (n == 0) throw lattice_error("empty matrix");
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int pass = 0; pass < 4; ++pass) {
        v = shifted_solve(T, value, std::move(v));
        double nrm = 0.0;
        for (const double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        for (double& x : v) x /= nrm;
    }

    // Rayleigh refinement and residual certificate
    auto apply = [&](const std::vector<double>& y, int i) {
        double r = T.diag[i] * y[i];
        if (i > 0) r += T.offdiag[i - 1] * y[i - 1];
        if (i + 1 < n) r += T.offdiag[i] * y[i + 1];
        return r;
    };
    double rayleigh = 0.0;
    for (int i = 0; i < n; ++i) rayleigh += v[i] * apply(v, i);

    double res = 0.0;
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        res = std::max(res, std::abs(apply(v, i) - rayleigh * v[i]));
        double row = std::abs(T.diag[i]);
        if (i > 0) row += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n) row += std::abs(T.offdiag[i]);
        scale = std::max(scale, row);
    }
    return EigenCertificate{rayleigh, std::move(v), res / scale};
}

SpectrumComparison compare_radial_spectrum(double K, int n_max, int N, double xi_max) {
    if (n_max < 0) throw lattice_error("n_max must be nonnegative");
    SpectrumComparison out;
    out.K = K;
    out.grid = make_radial_grid(N, xi_max);
    const auto T = radial_operator(K, out.grid);
    const auto levels = eig_sym_tridiagonal(T.diag, T.offdiag);
    if (static_cast<int>(levels.size()) <= n_max)
        throw lattice_error("grid too small for the requested level count");
    for (int k = 0; k <= n_max; ++k) {
        out.numeric.push_back(levels[k]);
        out.analytic.push_back(2.0 * (2.0 * k + K + 1.0));
        out.max_rel_err = std::max(
            out.max_rel_err, std::abs(out.numeric[k] - out.analytic[k]) / out.analytic[k]);
    }
    return out;
}

AngularEigReport angular_eig(int N, const DunklParams& params) {
    const auto op = dunkl::angular_operator(dunkl::AngularOp::J_phi, N, params);
    const Eigen::MatrixXd G = (op.mat * std::complex<double>(0.0, -1.0)).real();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(G, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw consistency_error("dense angular eigensolver did not converge");

    AngularEigReport rep;
    rep.N = N;
    const double window = N / 8.0;
    for (int k = 0; k < N; ++k) {
        const std::complex<double> mu = solver.eigenvalues()(k);
        // lambda = i mu; trusted when mu is essentially imaginary
        const double lam = -mu.imag();
        const double off_axis = std::abs(mu.real());
        if (off_axis > 1e-7 * std::max(1.0, std::abs(mu.imag()))) {
            ++rep.dropped_complex;
        } else if (std::abs(lam) > window) {
            ++rep.dropped_nyquist;
        } else {
            rep.lambdas.push_back(lam);
        }
    }
    std::sort(rep.lambdas.begin(), rep.lambdas.end());
    return rep;
}

} // namespace dpo::oracle
