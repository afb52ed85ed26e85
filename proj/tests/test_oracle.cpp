#include "dpo/oracle.hpp"

#include "dpo/angular_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

using namespace dpo::oracle;

TEST_CASE("radial grid construction") {
    const auto g = make_radial_grid(100, 12.0);
    CHECK(g.N == 100);
    CHECK(g.h == doctest::Approx(0.12).epsilon(1e-15));
    CHECK_THROWS_AS(make_radial_grid(8, 12.0), dpo::lattice_error);
    CHECK_THROWS_AS(make_radial_grid(100, 0.0), dpo::lattice_error);
}

TEST_CASE("discretized radial operator has the expected stencil") {
    const auto g = make_radial_grid(64, 8.0);
    const auto T = radial_operator(2.0, g);
    REQUIRE(T.diag.size() == 63);
    REQUIRE(T.offdiag.size() == 62);
    const double inv_h2 = 1.0 / (g.h * g.h);
    for (std::size_t i = 0; i < T.diag.size(); ++i) {
        const double xi = (static_cast<double>(i) + 1.0) * g.h;
        CHECK(T.diag[i] ==
              doctest::Approx(2.0 * inv_h2 + 3.75 / (xi * xi) + xi * xi).epsilon(1e-14));
    }
    for (const double o : T.offdiag) CHECK(o == -inv_h2);

    // K = 1/2 removes the centrifugal term entirely
    const auto T2 = radial_operator(0.5, g);
    for (std::size_t i = 0; i < T2.diag.size(); ++i) {
        const double xi = (static_cast<double>(i) + 1.0) * g.h;
        CHECK(T2.diag[i] == doctest::Approx(2.0 * inv_h2 + xi * xi).epsilon(1e-14));
    }
}

TEST_CASE("tridiagonal eigenvalues: closed-form matrices") {
    // 2x2 [[2,1],[1,2]] -> {1, 3}
    const auto two = eig_sym_tridiagonal({2.0, 2.0}, {1.0});
    REQUIRE(two.size() == 2);
    CHECK(two[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(two[1] == doctest::Approx(3.0).epsilon(1e-14));

    // diagonal matrix comes back sorted
    const auto diag = eig_sym_tridiagonal({5.0, 1.0, 3.0}, {0.0, 0.0});
    REQUIRE(diag.size() == 3);
    CHECK(diag[0] == 1.0);
    CHECK(diag[1] == 3.0);
    CHECK(diag[2] == 5.0);

    CHECK_THROWS_AS(eig_sym_tridiagonal({1.0, 2.0}, {0.5, 0.5}), dpo::lattice_error);

    // second-difference matrix: lambda_k = (2 - 2 cos(k pi / (n+1))) / h^2
    const int n = 50;
    const double h = 0.1;
    std::vector<double> d(n, 2.0 / (h * h)), o(n - 1, -1.0 / (h * h));
    const auto got = eig_sym_tridiagonal(d, o);
    REQUIRE(got.size() == static_cast<std::size_t>(n));
    constexpr double kPi = 3.14159265358979323846;
    for (int k = 1; k <= n; ++k) {
        const double want = (2.0 - 2.0 * std::cos(k * kPi / (n + 1))) / (h * h);
        CHECK(std::abs(got[static_cast<std::size_t>(k - 1)] - want) < 1e-10 * want);
    }
}

TEST_CASE("inverse iteration certifies its eigenpairs") {
    const auto g = make_radial_grid(2000, 12.0);
    const auto T = radial_operator(2.0, g);
    const auto vals = eig_sym_tridiagonal(T.diag, T.offdiag);
    for (int k = 0; k < 4; ++k) {
        const auto pair = tridiag_eigenvector(T, vals[static_cast<std::size_t>(k)]);
        CHECK(pair.residual <= 1e-8);
        CHECK(std::abs(pair.value - vals[static_cast<std::size_t>(k)]) < 1e-6 * vals[0]);
        // unit 2-norm
        double nrm = 0.0;
        for (const double x : pair.vec) nrm += x * x;
        CHECK(std::sqrt(nrm) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("discrete spectrum tracks the closed-form ladder 2(2n+K+1)") {
    const auto cmp = compare_radial_spectrum(2.0, 4, 2000, 12.0);
    REQUIRE(cmp.numeric.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(cmp.analytic[k] ==
              doctest::Approx(2.0 * (2.0 * static_cast<double>(k) + 3.0)).epsilon(1e-14));
    }
    CHECK(cmp.max_rel_err <= 1e-4);

    // K=1/2 is the Dirichlet half-line oscillator: levels 4n+3
    const auto half = compare_radial_spectrum(0.5, 3, 2000, 12.0);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(half.numeric[k] - (4.0 * static_cast<double>(k) + 3.0)) < 1e-3);
    }

    // flux shift between the two Set-A regions: 2 vartheta m_s = 1.2
    const auto outer = compare_radial_spectrum(1.4, 4, 2000, 12.0);
    CHECK(outer.max_rel_err <= 1e-4);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(std::abs((cmp.numeric[k] - outer.numeric[k]) - 1.2) < 1e-3);
    }

    CHECK_THROWS_AS(compare_radial_spectrum(2.0, -1, 2000, 12.0), dpo::lattice_error);
    // a grid that cannot hold the requested levels is rejected
    CHECK_THROWS_AS(compare_radial_spectrum(2.0, 80, 64, 4.0), dpo::lattice_error);
}

TEST_CASE("grid refinement converges at second order") {
    const double exact = 6.0; // 2E for n=0, K=2
    const double e1 = std::abs(compare_radial_spectrum(2.0, 0, 1000, 12.0).numeric[0] - exact);
    const double e2 = std::abs(compare_radial_spectrum(2.0, 0, 2000, 12.0).numeric[0] - exact);
    const double ratio = e1 / e2;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("dense angular diagonalization recovers the closed-form spectrum") {
    // undeformed case: eigenvalues are exactly the integers inside the
    // trusted window (even from the whole-index lattice, odd from the
    // half-odd one)
    const auto flat = angular_eig(64, dpo::DunklParams(0.0, 0.0));
    CHECK(std::is_sorted(flat.lambdas.begin(), flat.lambdas.end()));
    for (int m = -6; m <= 6; ++m) {
        double best = 1e300;
        for (const double lam : flat.lambdas) best = std::min(best, std::abs(lam - m));
        CHECK(best <= 1e-6);
    }

    // deformed case: every closed-form eigenvalue with l <= 4 appears
    const dpo::DunklParams nu(0.3, -0.3);
    const auto rep = angular_eig(128, nu);
    CHECK(rep.dropped_complex >= 0);
    auto contains = [&](double lam) {
        double best = 1e300;
        for (const double g : rep.lambdas) best = std::min(best, std::abs(g - lam));
        return best <= 1e-6;
    };
    const dpo::ParitySector even(1, 1), odd(1, -1);
    for (int sign : {1, -1}) {
        for (double l : {1.0, 2.0, 3.0, 4.0})
            CHECK(contains(dpo::angular::lambda_of(even, l, sign, nu)));
        for (double l : {0.5, 1.5, 2.5, 3.5})
            CHECK(contains(dpo::angular::lambda_of(odd, l, sign, nu)));
    }
    CHECK(contains(0.0));
}
