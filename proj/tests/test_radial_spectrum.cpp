#include "dpo/radial_spectrum.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

using namespace dpo::radial;
using dpo::DunklParams;
using dpo::FluxSpin;
using dpo::ParitySector;

namespace {

const DunklParams kNuA(0.3, -0.3); // flux-admissible on the even sector
const ParitySector kEven(1, 1);
const FluxSpin kFluxA(0.6, 1);

std::vector<double> dense_grid(double lo, double hi, int count) {
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return xs;
}

} // namespace

TEST_CASE("similarity exponent and the centrifugal bookkeeping identity") {
    CHECK(delta_shift(kNuA) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(delta_shift(DunklParams(0.25, 0.25)) == doctest::Approx(1.0).epsilon(1e-15));

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> pick(-0.45, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const DunklParams nu(pick(rng), pick(rng));
        CHECK(sector_identity_residual(nu, kEven) <= 1e-14);
        CHECK(sector_identity_residual(nu, ParitySector(1, -1)) <= 1e-14);
    }
}

TEST_CASE("inner centrifugal index: radical and branch reduction") {
    // nu1 + eps nu2 = 0 collapses the radical to |lambda|
    CHECK(k_minus(2.0, kNuA, kEven) == 2.0);
    CHECK(k_minus(-2.0, kNuA, kEven) == 2.0);
    CHECK(k_minus(1.5, DunklParams(0.3, 0.1), ParitySector(1, -1)) ==
          doctest::Approx(std::sqrt(2.25 + 0.04)).epsilon(1e-15));

    CHECK(k_minus_reduced(2.0, FluxSpin(0.6, 1)) == 2.0);
    CHECK(k_minus_reduced(-1.7, FluxSpin(0.6, -1)) == doctest::Approx(1.7).epsilon(1e-15));
    CHECK_THROWS_AS(k_minus_reduced(2.0, FluxSpin(0.6, -1)), dpo::branch_error);
    CHECK_THROWS_AS(k_minus_reduced(-2.0, FluxSpin(0.6, 1)), dpo::branch_error);
    CHECK_THROWS_AS(k_minus_reduced(0.0, FluxSpin(0.6, 1)), dpo::branch_error);
}

TEST_CASE("outer centrifugal index applies the flux shift under the constraint gate") {
    // reference pair: lambda=2, vartheta=0.6, m_s=+1 shifts K from 2 to 1.4
    CHECK(k_plus(2.0, kFluxA, kNuA, kEven) == doctest::Approx(1.4).epsilon(1e-15));
    // spin-down needs lambda < 0; the shift then adds
    CHECK(k_plus(-1.7, FluxSpin(0.6, -1), kNuA, kEven) == doctest::Approx(2.3).epsilon(1e-15));

    // vartheta = 0: no gate, K+ falls back to the radical exactly
    const DunklParams nusym(0.25, 0.25);
    CHECK(k_plus(2.0, FluxSpin(0.0, 1), nusym, kEven) == k_minus(2.0, nusym, kEven));

    // constraint violation, branch violation, and loss of normalizability
    CHECK_THROWS_AS(k_plus(2.0, kFluxA, nusym, kEven), dpo::constraint_error);
    CHECK_THROWS_AS(k_plus(2.0, FluxSpin(0.6, -1), kNuA, kEven), dpo::branch_error);
    CHECK_THROWS_AS(k_plus(0.5, FluxSpin(1.6, 1), kNuA, kEven), dpo::branch_error);
}

TEST_CASE("oscillator ladder E = 2n + K + 1") {
    CHECK(energy(0, 2.0) == 3.0);
    CHECK(energy(1, 1.4) == doctest::Approx(4.4).epsilon(1e-15));
    CHECK(energy(3, 0.5) == 7.5);
    CHECK_THROWS_AS(energy(-1, 2.0), dpo::lattice_error);
    CHECK_THROWS_AS(energy(0, -1.2), dpo::branch_error);
}

TEST_CASE("mode assembly pins the norm to the closed form") {
    const struct {
        Region region;
        int n;
        double K_want;
        double E_want;
    } cases[] = {
        {Region::inner, 0, 2.0, 3.0},
        {Region::outer, 0, 1.4, 2.4},
        {Region::inner, 1, 2.0, 5.0},
        {Region::outer, 5, 1.4, 12.4},
    };
    for (const auto& c : cases) {
        const auto mode = make_radial_mode(c.region, c.n, 2.0, kFluxA, kNuA, kEven);
        CHECK(mode.K == doctest::Approx(c.K_want).epsilon(1e-14));
        CHECK(mode.E == doctest::Approx(c.E_want).epsilon(1e-14));
        // quadrature-enforced norm against sqrt(2 n! / Gamma(n+K+1))
        CHECK(mode.norm == doctest::Approx(closed_form_norm(c.n, mode.K)).epsilon(1e-12));
    }
}

TEST_CASE("radial profile values against frozen references") {
    // frozen 50-digit evaluations of norm * xi^{K+1/2} e^{-xi^2/2} L_n^K(xi^2)
    const auto inner = make_radial_mode(Region::inner, 1, 2.0, kFluxA, kNuA, kEven);
    CHECK(std::abs(radial_eval(inner, 1.3) - 0.62602288818645253367) < 1e-13);

    const auto outer = make_radial_mode(Region::outer, 0, 2.0, kFluxA, kNuA, kEven);
    CHECK(std::abs(radial_eval(outer, 0.7) - 0.50432293884492410692) < 1e-13);

    const auto half = make_radial_mode(Region::inner, 3, 0.5, FluxSpin(0.0, 1),
                                       DunklParams(0.0, 0.0), kEven);
    CHECK(std::abs(radial_eval(half, 2.1) - 0.61931781441662346422) < 1e-13);

    // boundary behavior and derivative preconditions
    CHECK(radial_eval(inner, 0.0) == 0.0);
    CHECK_THROWS_AS(radial_eval_d(inner, 0.0), dpo::branch_error);
    CHECK_THROWS_AS(radial_eval_d(inner, -1.0), dpo::branch_error);
}

TEST_CASE("profiles solve the radial equation to near roundoff") {
    const auto grid = dense_grid(0.1, 6.0, 60);
    for (double K : {0.5, 1.1, 1.4, 2.0, 3.5}) {
        for (int n = 0; n <= 5; ++n) {
            RadialMode mode;
            mode.n = n;
            mode.K = K;
            mode.E = energy(n, K);
            mode.norm = closed_form_norm(n, K);
            CHECK(ode_residual(mode, grid) <= 1e-9);
        }
    }
}

TEST_CASE("a perturbed level leaves a visible equation residual") {
    auto mode = make_radial_mode(Region::inner, 2, 2.0, kFluxA, kNuA, kEven);
    mode.E += 1e-3;
    CHECK(ode_residual(mode, dense_grid(0.1, 6.0, 60)) > 1e-4);
}

TEST_CASE("region matching at the shell radius") {
    // without flux the regions coincide: the report is exactly trivial
    const auto trivial = matching_report(1, 2.0, FluxSpin(0.0, 1), kNuA, kEven, 0.01);
    CHECK(trivial.k_plus == trivial.k_minus);
    CHECK(trivial.amplitude_ratio == 1.0);
    CHECK(trivial.defect == 0.0);

    // n = 0: the derivative jump matches the shell strength identically
    const auto ground = matching_report(0, 2.0, kFluxA, kNuA, kEven, 0.01);
    CHECK(std::abs(ground.defect) < 1e-12);

    // n >= 1: first-order defect, halving with the radius
    double prev = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double R = 1e-2 / (1 << k);
        const auto rep = matching_report(1, 2.0, kFluxA, kNuA, kEven, R);
        CHECK(rep.k_minus == doctest::Approx(2.0));
        CHECK(rep.k_plus == doctest::Approx(1.4));
        // continuity amplitude approaches the leading small-R prediction
        CHECK(std::abs(rep.amplitude_ratio / rep.leading_ratio - 1.0) < 1e-3);
        if (k > 0) {
            const double order = std::log2(prev / std::abs(rep.defect));
            CHECK(order > 0.9);
            CHECK(order < 1.1);
        }
        prev = std::abs(rep.defect);
    }

    CHECK_THROWS_AS(matching_report(1, 2.0, kFluxA, kNuA, kEven, 0.0), dpo::branch_error);
    CHECK_THROWS_AS(matching_report(1, 2.0, kFluxA, kNuA, kEven, -0.5), dpo::branch_error);
}
