#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "gravnoise/integrate.hpp"

using namespace gravnoise;

namespace {

SpectralDensity single_term(Support support, Rational power, FreqFactor freq,
                            double c0 = 1.0, double c1 = 0.0, double threshold = 0.0) {
    SpectralDensity s;
    s.kind = SpectrumKind::Symmetrized;
    SpectralTerm t;
    t.support = support;
    t.threshold = threshold;
    t.power = power;
    t.freq = freq;
    t.c0 = c0;
    t.c1 = c1;
    s.terms.push_back(t);
    return s;
}

const SpectralWeight unit_weight = [](double, double, double) { return 1.0; };

}  // namespace

TEST_CASE("Quadrature primitives") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(std::numbers::pi) == Catch::Approx(0.0).margin(1e-15));
    CHECK(sinc(0.5) == Catch::Approx(std::sin(0.5) / 0.5).epsilon(1e-15));

    // The 64-node rule integrates low-degree polynomials to machine accuracy.
    CHECK(gauss_legendre_64([](double x) { return x * x * x * x * x * x; }, 0.0, 1.0) ==
          Catch::Approx(1.0 / 7.0).epsilon(1e-14));
    CHECK(gauss_legendre_64([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          Catch::Approx(std::numbers::e - 1.0).epsilon(1e-14));

    const detail::PanelResult panel =
        detail::gk15_panel([](double x) { return std::sin(x); }, 0.0, 1.0);
    CHECK(panel.value == Catch::Approx(1.0 - std::cos(1.0)).epsilon(1e-12));
    CHECK(panel.error < 1e-10);

    QuadratureOptions opt;
    CHECK(adaptive_integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, opt) ==
          Catch::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("Lightcone terms collapse onto the shell") {
    const SpectralDensity s = single_term(Support::OnShell, Rational(0), FreqFactor::One);
    const double omega = 2.0;

    CHECK(integrate_against(s, unit_weight, omega) == Catch::Approx(omega).epsilon(1e-13));
    CHECK(integrate_against(s, [](double, double, double k3) { return k3 * k3; }, omega) ==
          Catch::Approx(omega * omega * omega / 3.0).epsilon(1e-13));
    // The weight sees the on-shell invariant s = omega^2.
    CHECK(integrate_against(s, [](double, double sv, double) { return sv; }, omega) ==
          Catch::Approx(omega * omega * omega).epsilon(1e-13));
    CHECK(integrate_against(s, unit_weight, 0.0) == 0.0);
}

TEST_CASE("Interior terms integrate over the inside of the lightcone") {
    const double omega = 1.5;
    const double omega3 = omega * omega * omega;

    const SpectralDensity p0 = single_term(Support::Interior, Rational(0), FreqFactor::One);
    CHECK(integrate_against(p0, unit_weight, omega) ==
          Catch::Approx(2.0 / 3.0 * omega3).epsilon(1e-6));

    const SpectralDensity p1 = single_term(Support::Interior, Rational(1), FreqFactor::One);
    CHECK(integrate_against(p1, unit_weight, omega) ==
          Catch::Approx(4.0 / 15.0 * omega3 * omega * omega).epsilon(1e-6));

    // A pair-production threshold shrinks the support to s <= omega^2 - thr.
    const SpectralDensity gated =
        single_term(Support::Interior, Rational(0), FreqFactor::One, 1.0, 0.0, 1.0);
    CHECK(integrate_against(gated, unit_weight, 1.0) == 0.0);
    const double s_max = 4.0 - 1.0;
    CHECK(integrate_against(gated, unit_weight, 2.0) ==
          Catch::Approx(2.0 / 3.0 * std::pow(s_max, 1.5)).epsilon(1e-6));
}

TEST_CASE("Frequency factors gate the orientation") {
    const SpectralDensity full =
        single_term(Support::OnShell, Rational(0), FreqFactor::StepPositive);
    CHECK(integrate_against(full, unit_weight, 2.0) == Catch::Approx(2.0).epsilon(1e-13));
    CHECK(integrate_against(full, unit_weight, -2.0) == 0.0);

    const SpectralDensity odd = single_term(Support::OnShell, Rational(0), FreqFactor::Sign);
    CHECK(integrate_against(odd, unit_weight, -2.0) == Catch::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("Channel selection and degenerate terms") {
    const SpectralDensity s =
        single_term(Support::OnShell, Rational(0), FreqFactor::One, 3.0, 7.0);
    CHECK(integrate_against(s, unit_weight, 1.0, 0) == Catch::Approx(3.0).epsilon(1e-13));
    CHECK(integrate_against(s, unit_weight, 1.0, 1) == Catch::Approx(7.0).epsilon(1e-13));

    // delta(k^2) (k^2)^p vanishes identically for p >= 1.
    const SpectralDensity raised = single_term(Support::OnShell, Rational(2), FreqFactor::One);
    CHECK(integrate_against(raised, unit_weight, 1.0) == 0.0);

    const SpectralDensity singular =
        single_term(Support::OnShell, Rational(-1), FreqFactor::One);
    CHECK_THROWS_AS(integrate_against(singular, unit_weight, 1.0), QuadratureError);

    const SpectralDensity pv =
        single_term(Support::PrincipalValue, Rational(-1), FreqFactor::One);
    CHECK_THROWS_AS(integrate_against(pv, unit_weight, 1.0), std::invalid_argument);
}

TEST_CASE("Unresolvable oscillation exhausts the segment budget honestly") {
    const SpectralDensity interior =
        single_term(Support::Interior, Rational(0), FreqFactor::One);
    const SpectralWeight wild = [](double, double, double k3) {
        return std::cos(1e9 * k3);
    };
    CHECK_THROWS_AS(integrate_against(interior, wild, 1.0), QuadratureError);
}
