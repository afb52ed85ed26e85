#include "dpo/angular_spectrum.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

using namespace dpo::angular;
using dpo::DunklParams;
using dpo::ParitySector;

namespace {

const ParitySector kEven(1, 1);
const ParitySector kOdd(1, -1);

std::vector<AngularMode> standard_modes(const DunklParams& nu) {
    return {
        make_mode(kEven, 0.0, 1, nu),  make_mode(kEven, 1.0, 1, nu),
        make_mode(kEven, 1.0, -1, nu), make_mode(kEven, 2.0, 1, nu),
        make_mode(kOdd, 0.5, 1, nu),   make_mode(kOdd, 0.5, -1, nu),
        make_mode(kOdd, 1.5, 1, nu),
    };
}

} // namespace

TEST_CASE("angular eigenvalues on both sector lattices") {
    const DunklParams numix(0.3, -0.3), nusym(0.25, 0.25);

    // eps=+1 with nu1+nu2 = 0 collapses to lambda = +-2l
    CHECK(lambda_of(kEven, 1.0, 1, numix) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(lambda_of(kEven, 2.0, 1, numix) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(lambda_of(kEven, 1.0, -1, numix) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(lambda_of(kEven, 0.0, 1, numix) == 0.0);
    CHECK(lambda_of(kEven, 0.0, -1, numix) == 0.0);

    // frozen 50-digit references
    CHECK(std::abs(lambda_of(kEven, 1.0, 1, nusym) - 2.4494897427831780982) < 1e-14);
    CHECK(std::abs(lambda_of(kOdd, 0.5, 1, numix) - 0.8) < 1e-14);
    CHECK(std::abs(lambda_of(kOdd, 1.5, 1, numix) - 2.9393876913398137178) < 1e-14);

    // the two branches are exact negatives
    for (double l : {1.0, 2.0, 3.0})
        CHECK(lambda_of(kEven, l, -1, nusym) == -lambda_of(kEven, l, 1, nusym));
    for (double l : {0.5, 1.5, 2.5})
        CHECK(lambda_of(kOdd, l, -1, numix) == -lambda_of(kOdd, l, 1, numix));

    // off-lattice indices are rejected per sector
    CHECK_THROWS_AS(lambda_of(kEven, 0.5, 1, numix), dpo::lattice_error);
    CHECK_THROWS_AS(lambda_of(kEven, 1.25, 1, numix), dpo::lattice_error);
    CHECK_THROWS_AS(lambda_of(kOdd, 1.0, 1, numix), dpo::lattice_error);
    CHECK_THROWS_AS(lambda_of(kOdd, -0.5, 1, numix), dpo::lattice_error);
    CHECK_THROWS_AS(lambda_of(kEven, -1.0, 1, numix), dpo::lattice_error);
    CHECK_THROWS_AS(lambda_of(kEven, 1.0, 0, numix), dpo::lattice_error);
}

TEST_CASE("closed-form modes satisfy the sector and conjugation symmetries") {
    const DunklParams nu(0.4, 0.1);
    constexpr double kPi = 3.14159265358979323846;

    for (const auto& mode : standard_modes(nu)) {
        const int eps = mode.sector.eps();
        const auto flipped = make_mode(mode.sector, mode.l, -mode.sign, nu);
        for (double phi : {0.17, 1.3, 2.9, -0.6, -2.2}) {
            // R1 R2 parity: Phi(phi - pi) = eps Phi(phi)
            const auto a = eval_Phi(mode, phi - kPi);
            const auto b = eval_Phi(mode, phi);
            CHECK(std::abs(a - static_cast<double>(eps) * b) < 1e-13);
            // branch flip conjugates the mode
            CHECK(std::abs(eval_Phi(flipped, phi) - std::conj(b)) < 1e-14);
        }
    }

    // the lambda = 0 mode is the real constant function
    const auto zero = make_mode(kEven, 0.0, 1, DunklParams(0.3, -0.3));
    const auto v0 = eval_Phi(zero, 0.4);
    const auto v1 = eval_Phi(zero, -2.0);
    CHECK(v0.imag() == 0.0);
    CHECK(v0 == v1);
}

TEST_CASE("closed-form modes are grid eigenfunctions on all parameter sets") {
    const DunklParams sets[] = {{0.3, -0.3}, {0.25, 0.25}, {0.4, 0.1}};
    for (const auto& nu : sets) {
        for (int sign : {1, -1}) {
            for (double l : {1.0, 2.0, 3.0, 4.0}) {
                const auto rep = verify_mode(make_mode(kEven, l, sign, nu), 256);
                CHECK(rep.N == 256);
                CHECK(rep.residual <= 1e-6);
            }
            for (double l : {0.5, 1.5, 2.5, 3.5}) {
                const auto rep = verify_mode(make_mode(kOdd, l, sign, nu), 256);
                CHECK(rep.residual <= 1e-6);
            }
        }
        CHECK(verify_mode(make_mode(kEven, 0.0, 1, nu), 256).residual <= 1e-6);
    }
}

TEST_CASE("a perturbed eigenvalue is rejected by the grid check") {
    AngularMode bad = make_mode(kEven, 1.0, 1, DunklParams(0.3, -0.3));
    bad.lambda += 0.1;
    CHECK(verify_mode(bad, 128).residual > 1e-3);
}

TEST_CASE("modes are orthonormal under the deformed angular measure") {
    const DunklParams sets[] = {{0.3, -0.3}, {0.25, 0.25}, {0.4, 0.1}};
    for (const auto& nu : sets) {
        const auto modes = standard_modes(nu);
        const auto G = gram_matrix(modes);
        const auto n = static_cast<int>(modes.size());
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const std::complex<double> want = (i == j) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(G(i, j) - want));
            }
        }
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("flux-coupling constraint gate") {
    // eps=+1 wants nu2 = -nu1, eps=-1 wants nu2 = +nu1 (as -eps nu1 either way)
    CHECK(ab_constrain(kEven, DunklParams(0.3, -0.3)).ok);
    CHECK(ab_constrain(kOdd, DunklParams(0.3, 0.3)).ok);

    const auto bad = ab_constrain(kEven, DunklParams(0.25, 0.25));
    CHECK(!bad.ok);
    CHECK(bad.residual == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(!bad.requirement.empty());

    // the sector-resolved form nu1 eps1 + nu2 eps2 = 0 is the same condition
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pick(-0.45, 1.5);
    const ParitySector sectors[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int trial = 0; trial < 50; ++trial) {
        const DunklParams nu(pick(rng), pick(rng));
        for (const auto& sector : sectors) {
            const auto gate = ab_constrain(sector, nu);
            const double resolved = nu.nu1 * sector.eps1 + nu.nu2 * sector.eps2;
            CHECK(gate.ok == (std::abs(resolved) <= 1e-12));
            CHECK(gate.residual == doctest::Approx(std::abs(resolved)).epsilon(1e-12));
        }
    }
}
