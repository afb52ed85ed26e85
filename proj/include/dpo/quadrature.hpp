#pragma once

#include <functional>
#include <vector>

namespace dpo::quad {

/// Tanh-sinh (double-exponential) quadrature of f over (a, b). Handles
/// integrable endpoint singularities such as |x-a|^beta with beta > -1.
/// `levels` doublings of the trapezoid in the transformed variable.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 int levels = 7);

/// Cumulative integral of uniformly sampled values y_i at spacing h:
/// out[k] = integral from t_0 to t_k, fourth order (Simpson with a
/// quadratic half-panel rule at odd indices). out[0] = 0.
std::vector<double> cumulative_simpson(const std::vector<double>& y, double h);

} // namespace dpo::quad
