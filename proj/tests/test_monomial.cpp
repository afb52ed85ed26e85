#include "dpo/monomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

#include <doctest.h>

// The monomial calculus is templated on the coefficient type, so the
// deformed commutation relations can be checked in exact rational
// arithmetic: every residual polynomial must be identically zero, not just
// small.
namespace {

using Rat = boost::multiprecision::cpp_rational;
using dpo::dunkl::Axis;
using PolyD = dpo::dunkl::MonomialPoly<double>;
using PolyQ = dpo::dunkl::MonomialPoly<Rat>;

} // namespace

TEST_CASE("dunkl derivative acts on monomials with the parity-split factor") {
    const double nu1 = 0.3;

    // even exponent: plain derivative. D_x x^4 = 4 x^3
    const auto f4 = PolyD::monomial(4, 0);
    const auto d4 = dunkl_d(f4, Axis::x, nu1);
    REQUIRE(d4.terms().size() == 1);
    CHECK(d4.terms().at({3, 0}) == doctest::Approx(4.0));

    // odd exponent picks up the reflection term: D_x x^3 = (3 + 2 nu1) x^2
    const auto d3 = dunkl_d(PolyD::monomial(3, 0), Axis::x, nu1);
    REQUIRE(d3.terms().size() == 1);
    CHECK(d3.terms().at({2, 0}) == doctest::Approx(3.0 + 2.0 * nu1));

    // constants vanish, and the y-axis derivative ignores x powers
    CHECK(dunkl_d(PolyD::monomial(0, 0), Axis::x, nu1).is_zero());
    const auto dy = dunkl_d(PolyD::monomial(5, 1), Axis::y, 0.2);
    REQUIRE(dy.terms().size() == 1);
    CHECK(dy.terms().at({5, 0}) == doctest::Approx(1.0 + 2.0 * 0.2));

    CHECK_THROWS_AS(PolyD::monomial(-1, 0), std::invalid_argument);
}

TEST_CASE("squared derivative: composition equals the expanded single-shift form") {
    // exact rational coefficients: the two routes must agree term by term
    const Rat nu1(3, 10), nu2(-3, 10);
    for (int i = 0; i <= 7; ++i) {
        for (int j = 0; j + i <= 7; ++j) {
            const auto f = PolyQ::monomial(i, j);
            const auto twice_x = dunkl_d(dunkl_d(f, Axis::x, nu1), Axis::x, nu1);
            const auto direct_x = dunkl_dsq_direct(f, Axis::x, nu1);
            CHECK((twice_x - direct_x).is_zero());

            const auto twice_y = dunkl_d(dunkl_d(f, Axis::y, nu2), Axis::y, nu2);
            const auto direct_y = dunkl_dsq_direct(f, Axis::y, nu2);
            CHECK((twice_y - direct_y).is_zero());
        }
    }
}

TEST_CASE("laplacian on low monomials") {
    const Rat nu1(1, 4), nu2(1, 4);
    // Delta (x^2 + y^2) = 2(1 + 2 nu1) + 2(1 + 2 nu2) as a constant
    const auto f = PolyQ::monomial(2, 0) + PolyQ::monomial(0, 2);
    const auto lap = dunkl_laplacian(f, nu1, nu2);
    REQUIRE(lap.terms().size() == 1);
    CHECK(lap.terms().at({0, 0}) == Rat(2) + 4 * nu1 + Rat(2) + 4 * nu2);

    // harmonic in the deformed sense: Delta(x y) = 0 (both exponents < 2)
    CHECK(dunkl_laplacian(PolyQ::monomial(1, 1), nu1, nu2).is_zero());
}

TEST_CASE("deformed Heisenberg relations hold exactly in rational arithmetic") {
    // residuals of [D_a, x_b], [D_x, D_y], [x, y] over all monomials of
    // total degree <= 8, as exact rationals: zero means zero
    const auto rep =
        dpo::dunkl::check_heisenberg<Rat>(Rat(3, 10), Rat(-3, 10), 8);
    CHECK(rep.max_residual == Rat(0));

    const auto rep2 = dpo::dunkl::check_heisenberg<Rat>(Rat(7, 5), Rat(22, 7), 8);
    CHECK(rep2.max_residual == Rat(0));
}

TEST_CASE("deformed Heisenberg relations in double precision") {
    // the acceptance pairs: deformed, sign-mixed, strongly coupled,
    // near-singular and undeformed
    const std::pair<double, double> pairs[] = {
        {0.3, -0.3}, {0.25, 0.25}, {1.7, 0.4}, {-0.49, 2.0}, {0.0, 0.0}};
    for (const auto& [n1, n2] : pairs) {
        const auto rep = dpo::dunkl::check_heisenberg(dpo::DunklParams(n1, n2), 8);
        CHECK(rep.max_residual <= 1e-13);
    }
    // undeformed double arithmetic is exact: the residual is literally zero
    const auto undeformed = dpo::dunkl::check_heisenberg(dpo::DunklParams(0.0, 0.0), 8);
    CHECK(undeformed.max_residual == 0.0);
}
