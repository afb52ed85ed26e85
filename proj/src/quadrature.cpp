#include "dpo/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace dpo::quad {

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 int levels) {
    if (!(b > a)) throw std::invalid_argument("tanh_sinh: need b > a");
    const double half = 0.5 * (b - a);
    const double pi_2 = 1.57079632679489661923;

    // Evaluate at abscissa u = tanh(pi/2 sinh t). Node coordinates are formed
    // as endpoint + distance with the distance taken from exp(-pi sinh t)
    // directly, so an endpoint at 0 keeps denormal-level resolution and an
    // integrable singularity there is sampled exactly.
    auto sample = [&](double t) -> double {
        const double s = pi_2 * std::sinh(t);
        const double ch = std::cosh(s);
        const double w = pi_2 * std::cosh(t) / (ch * ch);
        if (w < 1e-320) return 0.0;
        const double e = std::exp(-2.0 * s);            // = (1-u)/(1+u)
        const double dist = half * 2.0 * e / (1.0 + e); // = half (1 - u)
        if (dist == 0.0) return 0.0;
        double acc = w * f(a + dist);
        if (t > 0.0) acc += w * f(b - dist);
        return acc;
    };

    // trapezoid in t with step refinement; t-range wide enough that the
    // weight underflows before the range ends
    const double t_max = 4.0;
    double hstep = 1.0;
    double total = hstep * sample(0.0);
    for (int k = 1; k * hstep <= t_max; ++k) total += hstep * sample(k * hstep);

    for (int lvl = 1; lvl <= levels; ++lvl) {
        hstep *= 0.5;
        double add = 0.0;
        for (int k = 1; k * hstep <= t_max; k += 2) add += sample(k * hstep);
        total = 0.5 * total + hstep * add;
    }
    return half * total;
}

std::vector<double> cumulative_simpson(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    if (n < 3) throw std::invalid_argument("cumulative_simpson: need >= 3 samples");
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 2; k < n; k += 2)
        out[k] = out[k - 2] + h / 3.0 * (y[k - 2] + 4.0 * y[k - 1] + y[k]);
    // odd indices: quadratic through the surrounding three points
    for (std::size_t k = 1; k < n; k += 2) {
        if (k + 1 < n)
            out[k] = out[k - 1] + h / 12.0 * (5.0 * y[k - 1] + 8.0 * y[k] - y[k + 1]);
        else // trailing odd sample: use the panel behind it
            out[k] = out[k - 1] + h / 12.0 * (-y[k - 2] + 8.0 * y[k - 1] + 5.0 * y[k]);
    }
    return out;
}

} // namespace dpo::quad
