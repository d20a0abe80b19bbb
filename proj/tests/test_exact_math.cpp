#include <catch2/catch_amalgamated.hpp>

#include "gravnoise/rational.hpp"

using namespace gravnoise;

TEST_CASE("Rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, 6) == Rational(1, -2));
    CHECK(Rational(7) * Rational(3, 7) == Rational(3));
    CHECK((Rational(5, 8) / Rational(5, 2)) == Rational(1, 4));
    CHECK(Rational(3, 4).value() == 0.75);
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("PiPower algebra tracks half-integer exponents of pi") {
    const PiPower a(Rational(1, 2), 2);   // pi / 2
    const PiPower b(Rational(3), -1);     // 3 / sqrt(pi)
    const PiPower p = a * b;              // (3/2) sqrt(pi)
    CHECK(p == PiPower(Rational(3, 2), 1));
    CHECK(p.value() == Catch::Approx(1.5 * std::sqrt(std::numbers::pi)).epsilon(1e-15));

    CHECK(a / a == PiPower(Rational(1)));
    CHECK(a + a == PiPower(Rational(1), 2));
    // Adding zero is tolerated regardless of exponent; true mismatches throw.
    CHECK(a + PiPower(Rational(0), -4) == a);
    CHECK_THROWS_AS(a + b, std::invalid_argument);

    CHECK((-a) == PiPower(Rational(-1, 2), 2));
    CHECK(PiPower(Rational(0), 6).is_zero());
}

TEST_CASE("PiPower renders closed forms") {
    CHECK(PiPower(Rational(1, 960), -4).str() == "1/(960*pi^2)");
    CHECK(PiPower(Rational(1, 80), -4).str() == "1/(80*pi^2)");
    CHECK(PiPower(Rational(1, 24), -2).str() == "1/(24*pi)");
    CHECK(PiPower(Rational(0)).str() == "0");
    CHECK(PiPower(Rational(-1, 4), -2).str() == "-1/(4*pi)");
    CHECK(PiPower(Rational(10), 4).str() == "10*pi^2");
    CHECK(PiPower(Rational(3, 4), 1).str() == "3*sqrt(pi)/4");
}

TEST_CASE("Exact factorials and half-integer gamma values") {
    CHECK(factorial_exact(0) == Rational(1));
    CHECK(factorial_exact(5) == Rational(120));
    CHECK_THROWS_AS(factorial_exact(-1), std::invalid_argument);
    CHECK_THROWS_AS(factorial_exact(21), std::overflow_error);

    // gamma_exact(2x) = Gamma(x): integers and half-integers.
    CHECK(gamma_exact(2) == PiPower(Rational(1)));       // Gamma(1)
    CHECK(gamma_exact(6) == PiPower(Rational(2)));       // Gamma(3) = 2
    CHECK(gamma_exact(1) == PiPower(Rational(1), 1));    // Gamma(1/2) = sqrt(pi)
    CHECK(gamma_exact(5) == PiPower(Rational(3, 4), 1)); // Gamma(5/2) = 3 sqrt(pi)/4
    CHECK_THROWS_AS(gamma_exact(0), std::invalid_argument);
}
