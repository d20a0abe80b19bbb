#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gravnoise/tidal.hpp"

using namespace gravnoise;

namespace {

// Interior curvature coefficient density whose observable channel values at
// any timelike momentum are exactly (alpha, beta): inverts the -1/4 and +1/4
// fluctuation-dissipation factors of the observable map.
RiemannSpectrum constant_riemann(double alpha, double beta) {
    RiemannSpectrum rs;
    rs.dim = 4;
    for (SpectralDensity* side : {&rs.a, &rs.b}) {
        side->kind = SpectrumKind::Symmetrized;
        side->hbar = 1.0;
        side->dim = 4;
        SpectralTerm t;
        t.support = Support::Interior;
        t.power = Rational(0);
        t.freq = FreqFactor::One;
        side->terms.push_back(t);
    }
    rs.a.terms[0].c0 = -2.0 * alpha;
    rs.b.terms[0].c0 = 2.0 * beta;
    return rs;
}

}  // namespace

TEST_CASE("Probe validation") {
    CHECK_NOTHROW(validate_probe(ProbeConfig{0.0, 1.0, 1.0}));
    CHECK_NOTHROW(validate_probe(ProbeConfig{1.0, 2.0, 0.5}));
    CHECK_THROWS_AS(validate_probe(ProbeConfig{-0.1, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_probe(ProbeConfig{1.2, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_probe(ProbeConfig{std::nan(""), 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_probe(ProbeConfig{0.5, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_probe(ProbeConfig{0.5, 1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("Tidal coefficient of a single mode") {
    const Momentum k{1.2, 0.3, -0.5, 0.8};
    const ProbeConfig probe{0.4, 1.0, 1.0};
    const Tensor2 q = tidal_coefficient(k, probe);

    // Longitudinal entry is velocity independent: (k3^2 - k0^2) / 2.
    const double q33 = 0.5 * (k[3] * k[3] - k.k0() * k.k0());
    CHECK(q(3, 3) == Catch::Approx(q33).epsilon(1e-14));
    for (double v : {0.0, 0.2, 0.9}) {
        CHECK(tidal_coefficient(k, ProbeConfig{v, 1.0, 1.0})(3, 3) ==
              Catch::Approx(q33).epsilon(1e-14));
    }

    // Temporal row and column follow the longitudinal entries.
    CHECK(q(0, 0) == Catch::Approx(probe.v * probe.v * q(3, 3)).epsilon(1e-14));
    for (int i = 1; i <= 3; ++i) {
        CHECK(q(0, i) == Catch::Approx(probe.v * q(i, 3)).epsilon(1e-14));
        CHECK(q(i, 0) == q(0, i));
    }

    // Spatial block formula at one hand-checked entry.
    const double u = k.k0() - k[3] * probe.v;
    const double want12 = 0.5 * k[1] * k[2] * (1.0 - probe.v * probe.v);
    CHECK(q(1, 2) == Catch::Approx(want12).epsilon(1e-14));
    const double want13 =
        0.5 * (k[1] * k[3] * (1.0 - probe.v * probe.v) - probe.v * k[1] * u);
    CHECK(q(1, 3) == Catch::Approx(want13).epsilon(1e-14));

    // A co-propagating null probe feels no tidal force.
    const Momentum null3{2.0, 0.0, 0.0, 2.0};
    CHECK(tidal_coefficient(null3, ProbeConfig{1.0, 1.0, 1.0}).max_abs() == 0.0);

    CHECK_THROWS_AS(tidal_coefficient(Momentum{1.0, 0.2, 0.3}, probe), DimensionError);
    CHECK_THROWS_AS(tidal_coefficient(k, ProbeConfig{2.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("Closed tidal spectra at frozen support points") {
    // Static probe, interior mode.
    const TidalSpectra a =
        tidal_spectra_closed(2.0, 3.0, 1.0, ProbeConfig{0.0, 1.0, 1.0}, 1.0, 2.0);
    CHECK(a.c33 == 27.0);
    CHECK(a.c13 == 19.0);
    CHECK(a.c23 == 19.0);
    CHECK(a.c12 == 17.5);
    CHECK(a.c12p == 17.5);
    CHECK(a.c33q == -17.0);
    CHECK(a.cqq == 51.0);
    CHECK(a.alpha == 1.0);
    CHECK(a.beta == 2.0);

    // Moving probe; all values are exact dyadic rationals.
    const TidalSpectra b =
        tidal_spectra_closed(1.0, 0.5, 0.5, ProbeConfig{0.5, 1.0, 1.0}, 2.0, 1.0);
    CHECK(b.c33 == 0.0);
    CHECK(b.c13 == 0.3515625);
    CHECK(b.c12 == 0.2109375);
    CHECK(b.c33q == 1.40625);
    CHECK(b.cqq == -2.953125);

    CHECK_THROWS_AS(tidal_spectra_closed(1.0, 0.2, 0.5, ProbeConfig{}, 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("Lightcone channel is Ricci-flat: no cross or trace spectra on shell") {
    for (double v : {0.0, 0.3, 0.7}) {
        for (double k3 : {-1.5, 0.0, 0.4, 2.0}) {
            const TidalSpectra t = tidal_spectra_closed(
                2.0, 4.0, k3, ProbeConfig{v, 1.0, 1.0}, 5.0, 5.0);
            CHECK(t.c33q == 0.0);
            CHECK(t.cqq == 0.0);
        }
    }
}

TEST_CASE("Closed forms agree with the azimuth-averaged oracle") {
    const RiemannSpectrum rs = constant_riemann(1.3, 0.7);
    const ProbeConfig probe{0.3, 1.0, 1.5};
    const double omega = 2.0;
    const double s = 3.0;
    const double k3 = 1.0;

    const TidalSpectra oracle = tidal_spectra_oracle(omega, s, k3, probe, rs);
    CHECK(oracle.alpha == Catch::Approx(1.3).epsilon(1e-14));
    CHECK(oracle.beta == Catch::Approx(0.7).epsilon(1e-14));

    const TidalSpectra closed = tidal_spectra_closed(omega, s, k3, probe, 1.3, 0.7);
    CHECK(oracle.c33 == Catch::Approx(closed.c33).epsilon(1e-7));
    CHECK(oracle.c13 == Catch::Approx(closed.c13).epsilon(1e-7));
    CHECK(oracle.c23 == Catch::Approx(closed.c23).epsilon(1e-7));
    CHECK(oracle.c12 == Catch::Approx(closed.c12).epsilon(1e-7));
    CHECK(oracle.c12p == Catch::Approx(closed.c12p).epsilon(1e-7));
    CHECK(oracle.c33q == Catch::Approx(closed.c33q).epsilon(1e-7));
    CHECK(oracle.cqq == Catch::Approx(closed.cqq).epsilon(1e-7));

    CHECK_THROWS_AS(tidal_spectra_oracle(omega, 0.5, 1.0, probe, rs), std::invalid_argument);
    CHECK_THROWS_AS(tidal_spectra_oracle(omega, s, k3, probe, rs, 1), std::invalid_argument);
    // Two azimuth nodes cannot resolve the average: reported, not hidden.
    CHECK_THROWS_AS(tidal_spectra_oracle(omega, s, k3, ProbeConfig{0.8, 1.0, 1.0}, rs, 2),
                    QuadratureError);
}

TEST_CASE("Shell component integrands") {
    const ProbeConfig probe{0.25, 1.0, 1.0};
    const double omega = 2.0;
    const double k3 = 1.0;
    const GwComponentSpectra g = gw_component_spectra(omega, k3, probe);
    const TidalSpectra ref = tidal_spectra_closed(omega, omega * omega, k3, probe, 1.0, 1.0);
    CHECK(g.c33 == ref.c33);
    CHECK(g.c13 == ref.c13);
    CHECK(g.c23 == ref.c23);
    CHECK(g.c12 == ref.c12);
    CHECK(g.c12p == ref.c12p);

    // Unit channel weights: c33 = (2 beta - alpha) w^2 = w^2.
    const double w = omega * omega - k3 * k3;
    CHECK(g.c33 == Catch::Approx(w * w).epsilon(1e-14));

    CHECK_THROWS_AS(gw_component_spectra(1.0, 1.5, probe), std::invalid_argument);
    CHECK_THROWS_AS(gw_component_spectra(1.0, std::nan(""), probe), std::invalid_argument);
}
