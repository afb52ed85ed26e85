#pragma once

// Independent numerical references: a finite-difference discretization of the
// radial operator with an in-repo symmetric tridiagonal eigensolver, and a
// dense grid diagonalization of the angular operator.

#include "dpo/types.hpp"

#include <vector>

namespace dpo::oracle {

struct RadialGrid {
    int N = 0;          // number of cells; interior nodes are i h, i=1..N-1
    double xi_max = 0.0;
    double h = 0.0;
};

RadialGrid make_radial_grid(int N, double xi_max);

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag; // offdiag[i] couples node i and i+1
};

/// Dirichlet finite-difference matrix of
/// -d^2/dxi^2 + (K^2 - 1/4)/xi^2 + xi^2 on the interior nodes; eigenvalues
/// approximate 2E = 2(2n + K + 1).
Tridiagonal radial_operator(double K, const RadialGrid& grid);

/// All eigenvalues of a symmetric tridiagonal matrix, ascending, by the
/// implicit-shift QL iteration.
std::vector<double> eig_sym_tridiagonal(std::vector<double> diag, std::vector<double> offdiag);

struct EigenCertificate {
    double value = 0.0;
    std::vector<double> vec; // unit 2-norm
    double residual = 0.0;   // ||T v - value v||_inf / ||T||_inf
};

/// Inverse-iteration eigenvector for an eigenvalue estimate, with a residual
/// certificate.
EigenCertificate tridiag_eigenvector(const Tridiagonal& T, double value);

struct SpectrumComparison {
    double K = 0.0;
    RadialGrid grid;
    std::vector<double> numeric;  // lowest levels of the discretized operator
    std::vector<double> analytic; // 2 (2n + K + 1)
    double max_rel_err = 0.0;
};

/// Lowest n_max+1 levels of the discretized operator against the closed-form
/// ladder.
SpectrumComparison compare_radial_spectrum(double K, int n_max, int N, double xi_max);

struct AngularEigReport {
    int N = 0;
    std::vector<double> lambdas; // trusted real eigenvalues, ascending
    int dropped_nyquist = 0;     // real but outside the |lambda| <= N/8 window
    int dropped_complex = 0;     // discretization artifacts off the real axis
};

/// Diagonalizes the dense angular operator on the N-point grid and keeps the
/// spectrally trustworthy real eigenvalues.
AngularEigReport angular_eig(int N, const DunklParams& params);

} // namespace dpo::oracle
