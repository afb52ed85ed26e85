#pragma once

#include "dpo/types.hpp"

namespace dpo::specfun {

/// log Gamma(x) for x > 0, accurate to ~1e-14 relative.
double ln_gamma(double x);

/// Jacobi polynomial P_n^{(a,b)}(x) with its derivative, by ascending
/// three-term recurrence. Requires a, b > -1 and |x| <= 1.
PolyEval jacobi_P(int n, double a, double b, double x);

/// Generalized Laguerre polynomial L_n^{alpha}(x) with its derivative,
/// by ascending recurrence. Requires alpha > -1 and x >= 0.
PolyEval laguerre_L(int n, double alpha, double x);

// Normalization constants of the two components of an angular mode:
// `a` multiplies the real (leading) Jacobi term, `b` the imaginary one.
// Computed in log space so large indices do not overflow.
struct AngularNorms {
    double a;
    double b;
};

/// Component norms for sector eps at angular index l (integers for eps=+1,
/// half-odd integers for eps=-1). l=0 in eps=+1 is the constant mode (b=0).
AngularNorms angular_norms(const ParitySector& sector, double l, const DunklParams& params);

} // namespace dpo::specfun
