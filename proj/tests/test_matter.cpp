#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "gravnoise/matter.hpp"

using namespace gravnoise;

namespace {

// Reference massless scalar trace coefficient, evaluated in floating point:
// (4 pi)^(-d/2) Gamma(d/2 + 1) / Gamma(d + 2).
double scalar_c0_reference(int d) {
    return std::pow(4.0 * std::numbers::pi, -0.5 * d) * std::tgamma(0.5 * d + 1.0) /
           std::tgamma(d + 2.0);
}

}  // namespace

TEST_CASE("Massless scalar channel coefficients") {
    CHECK(zeta_scalar_massless_exact(Dimension(4)).c0.str() == "1/(960*pi^2)");
    CHECK(zeta_scalar_massless_exact(Dimension(4)).c1.str() == "1/(96*pi^2)");
    CHECK(zeta_scalar_massless_exact(Dimension(2)).c0.str() == "1/(24*pi)");
    CHECK(zeta_scalar_massless_exact(Dimension(2)).c1.str() == "0");

    for (int d = 3; d <= 8; ++d) {
        const ChannelScalar z = zeta_scalar_massless(Dimension(d));
        CHECK(z.c0 == Catch::Approx(scalar_c0_reference(d)).epsilon(1e-13));
        // Traceless-to-trace ratio (d-2)^2 (d+1) / 2 for a minimally coupled scalar.
        CHECK(z.c1 / z.c0 == Catch::Approx(0.5 * (d - 2) * (d - 2) * (d + 1)).epsilon(1e-13));
    }
}

TEST_CASE("Maxwell and neutrino channel coefficients") {
    CHECK(zeta_maxwell_exact(Dimension(4)).c0.str() == "1/(80*pi^2)");
    CHECK(zeta_maxwell_exact(Dimension(4)).c1.str() == "0");
    // Two-form noise in two dimensions has a negative trace weight: the gauge
    // field carries no local degrees of freedom there.
    CHECK(zeta_maxwell_exact(Dimension(2)).c0.str() == "-1/(4*pi)");

    for (int d = 3; d <= 8; ++d) {
        const ChannelScalar mx = zeta_maxwell(Dimension(d));
        const ChannelScalar nu = zeta_neutrino(Dimension(d));
        const double base = scalar_c0_reference(d);
        CHECK(mx.c0 == Catch::Approx(base * (2.0 * d * d - 3.0 * d - 8.0)).epsilon(1e-13));
        CHECK(mx.c1 ==
              Catch::Approx(base * 0.5 * (d - 4) * (d - 4) * (d - 2) * (d + 1)).epsilon(1e-13));
        CHECK(nu.c0 == Catch::Approx(0.25 * mx.c0).epsilon(1e-14));
        CHECK(nu.c1 == Catch::Approx(0.25 * mx.c1).epsilon(1e-14));
    }
    // The traceless Maxwell weight vanishes exactly in four dimensions.
    CHECK(zeta_maxwell(Dimension(4)).c1 == 0.0);
}

TEST_CASE("Massive scalar coefficients gate at the pair threshold") {
    const Dimension d4(4);
    const double mu = 1.0;

    CHECK(zeta_scalar_massive(d4, mu, 3.9).c0 == 0.0);
    CHECK(zeta_scalar_massive(d4, mu, 4.0).c0 == 0.0);
    CHECK(zeta_scalar_massive(d4, mu, 4.0 + 1e-9).c0 > 0.0);

    // Frozen reference point: d = 4, mu = 1, k^2 = 8.
    const ChannelScalar z = zeta_scalar_massive(d4, mu, 8.0);
    CHECK(z.c0 == Catch::Approx(1.8657525008162639e-05).epsilon(1e-14));
    CHECK(z.c1 == Catch::Approx(1.1660953130101649e-03).epsilon(1e-14));

    // Far above threshold the massless values are recovered.
    const ChannelScalar far = zeta_scalar_massive(d4, mu, 1e12);
    const ChannelScalar massless = zeta_scalar_massless(d4);
    CHECK(far.c0 == Catch::Approx(massless.c0).epsilon(1e-9));
    CHECK(far.c1 == Catch::Approx(massless.c1).epsilon(1e-9));

    // mu = 0 degenerates to the massless value inside the lightcone only.
    CHECK(zeta_scalar_massive(d4, 0.0, 2.0).c0 == massless.c0);
    CHECK(zeta_scalar_massive(d4, 0.0, -1.0).c0 == 0.0);

    CHECK_THROWS_AS(zeta_scalar_massive(d4, -1.0, 8.0), std::invalid_argument);
    CHECK_THROWS_AS(zeta_scalar_massive(Dimension(2), 1.0, 8.0), DimensionError);
}

TEST_CASE("Content aggregation weighs species by multiplicity") {
    FieldContent content{{{SpeciesKind::Maxwell, 0.0, 1}, {SpeciesKind::Neutrino, 0.0, 3}},
                         Dimension(4)};
    const ChannelScalar z = zeta_content(content, 1.0);
    const double unit = 1.0 / (80.0 * std::numbers::pi * std::numbers::pi);
    CHECK(z.c0 == Catch::Approx((1.0 + 3.0 * 0.25) * unit).epsilon(1e-13));
    CHECK(z.c1 == 0.0);

    const ExactChannel exact = zeta_content_exact(content);
    CHECK(exact.c0.value() == Catch::Approx(z.c0).epsilon(1e-15));

    CHECK(content_massless(content));
    CHECK(content_max_threshold(content) == 0.0);

    FieldContent massive{{{SpeciesKind::Scalar, 0.5, 2}}, Dimension(4)};
    CHECK_FALSE(content_massless(massive));
    CHECK(content_max_threshold(massive) == Catch::Approx(1.0));
    CHECK_THROWS_AS(zeta_content_exact(massive), std::invalid_argument);

    CHECK_THROWS_AS(zeta_content(FieldContent{{}, Dimension(4)}, 1.0), std::invalid_argument);

    FieldContent bad_mult{{{SpeciesKind::Scalar, 0.0, 0}}, Dimension(4)};
    CHECK_THROWS_AS(validate_content(bad_mult), std::invalid_argument);
    FieldContent bad_mass{{{SpeciesKind::Maxwell, 0.5, 1}}, Dimension(4)};
    CHECK_THROWS_AS(validate_content(bad_mass), std::invalid_argument);
}

TEST_CASE("Stress noise density is a single interior power law") {
    const PhysicalScales scales = PhysicalScales::natural();
    FieldContent content{{{SpeciesKind::Scalar, 0.0, 1}}, Dimension(4)};
    const SpectralDensity s = stress_tensor_density(content, scales);

    CHECK(s.kind == SpectrumKind::Symmetrized);
    CHECK(s.dim == 4);
    REQUIRE(s.terms.size() == 1);
    const SpectralTerm& t = s.terms[0];
    CHECK(t.support == Support::Interior);
    CHECK(t.power == Rational(2));
    const double pi = std::numbers::pi;
    CHECK(t.c0.real() == Catch::Approx(pi / (960.0 * pi * pi)).epsilon(1e-15));
    CHECK(t.c1.real() == Catch::Approx(pi / (96.0 * pi * pi)).epsilon(1e-15));
    CHECK_FALSE(t.anomaly);

    CHECK_THROWS_AS(stress_tensor_density(FieldContent{{}, Dimension(4)}, scales),
                    std::invalid_argument);
    FieldContent massive{{{SpeciesKind::Scalar, 1.0, 1}}, Dimension(4)};
    CHECK_THROWS_AS(stress_tensor_density(massive, scales), std::invalid_argument);
}

TEST_CASE("Two-dimensional scalars carry a transverse lightcone anomaly") {
    const PhysicalScales scales = PhysicalScales::natural();
    FieldContent content{{{SpeciesKind::Scalar, 0.0, 2}}, Dimension(2)};
    const SpectralDensity s = stress_tensor_density(content, scales);

    REQUIRE(s.terms.size() == 2);
    const SpectralTerm& a = s.terms[1];
    CHECK(a.anomaly);
    CHECK(a.support == Support::OnShell);
    CHECK(a.power == Rational(0));
    CHECK(a.c0.real() == Catch::Approx(2.0 / 12.0).epsilon(1e-15));

    // Contracting a momentum into the anomaly structure raises the lightcone
    // power, which vanishes identically: the term is structurally transverse.
    SpectralDensity anomaly_only = s;
    anomaly_only.terms = {a};
    CHECK(simplified(with_power_shift(anomaly_only, Rational(1))).terms.empty());

    // No anomaly away from d = 2, and none for non-scalar species.
    FieldContent d3{{{SpeciesKind::Scalar, 0.0, 1}}, Dimension(3)};
    CHECK(stress_tensor_density(d3, scales).terms.size() == 1);
    FieldContent mx2{{{SpeciesKind::Maxwell, 0.0, 1}}, Dimension(2)};
    CHECK(stress_tensor_density(mx2, scales).terms.size() == 1);
}
