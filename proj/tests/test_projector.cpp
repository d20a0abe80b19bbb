#include <catch2/catch_amalgamated.hpp>

#include "gravnoise/projector.hpp"

using namespace gravnoise;

TEST_CASE("Channel eigenvalues and weights") {
    const ChannelScalar l4 = channel_lambda(Dimension(4));
    CHECK(l4.c0 == 1.0);
    CHECK(l4.c1 == -0.5);
    CHECK(channel_lambda(Dimension(3)).c1 == -1.0);
    CHECK(channel_lambda(Dimension(6)).c1 == Catch::Approx(-0.25));
    CHECK_THROWS_AS(channel_lambda(Dimension(2)), SingularChannelError);

    CHECK(channel_alpha(1, Dimension(4)) == Rational(1, 3));
    CHECK(channel_alpha(0, Dimension(4)) == Rational(-1, 3));
    CHECK(channel_alpha(1, Dimension(5)) == Rational(1, 4));
    CHECK(channel_beta(0, Dimension(4)) == Rational(1, 2));
    CHECK(channel_beta(1, Dimension(7)) == Rational(0));
    CHECK_THROWS_AS(channel_alpha(2, Dimension(4)), std::invalid_argument);
    CHECK_THROWS_AS(channel_beta(-1, Dimension(4)), std::invalid_argument);
}

TEST_CASE("ChannelScalar arithmetic") {
    const ChannelScalar a{1.0, 2.0};
    const ChannelScalar b{0.5, -1.0};
    const ChannelScalar s = a + b;
    CHECK(s.c0 == 1.5);
    CHECK(s.c1 == 1.0);
    const ChannelScalar t = 2.0 * a;
    CHECK(t[0] == 2.0);
    CHECK(t[1] == 4.0);
    CHECK((a * 3.0).c1 == 6.0);
    CHECK_THROWS_AS(a[2], std::invalid_argument);
}

TEST_CASE("Transverse projector annihilates its momentum") {
    const Momentum k{1.3, 0.4, -0.2, 0.7};
    const Tensor2 pi = transverse_projector(k);
    const int d = k.dim();

    for (int n = 0; n < d; ++n) {
        double contracted = 0.0;
        for (int m = 0; m < d; ++m) contracted += k[m] * pi(m, n);
        CHECK(contracted == Catch::Approx(0.0).margin(1e-14));
    }
    CHECK(trace(pi) == Catch::Approx(d - 1).epsilon(1e-13));

    // pi eta pi = pi: projector property through the metric.
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            double acc = 0.0;
            for (int a = 0; a < d; ++a) {
                acc += pi(m, a) * metric_sign(a) * pi(a, n);
            }
            CHECK(acc == Catch::Approx(pi(m, n)).margin(1e-13));
        }
    }

    CHECK_THROWS_AS(transverse_projector(Momentum{1.0, 1.0, 0.0, 0.0}), NullMomentumError);
}

TEST_CASE("Channel forms are orthogonal idempotents") {
    const Momentum k{1.7, 0.3, 0.5, -0.1, 0.2};  // d = 5, timelike
    const Tensor4 p0 = channel_form(0, k);
    const Tensor4 p1 = channel_form(1, k);
    const int d = k.dim();

    const Tensor4 p0p0 = pair_product(p0, p0);
    const Tensor4 p1p1 = pair_product(p1, p1);
    const Tensor4 p0p1 = pair_product(p0, p1);
    CHECK((p0p0 - p0).max_abs() < 1e-13);
    CHECK((p1p1 - p1).max_abs() < 1e-13);
    CHECK(p0p1.max_abs() < 1e-13);

    // Pair traces: tr pi^1 = pi, tr pi^0 = 0.
    const Tensor2 pi = transverse_projector(k);
    const Tensor2 t1 = pair_trace(p1);
    const Tensor2 t0 = pair_trace(p0);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            CHECK(t1(m, n) == Catch::Approx(pi(m, n)).margin(1e-13));
            CHECK(t0(m, n) == Catch::Approx(0.0).margin(1e-13));
        }
    }

    // Full contractions count the channel ranks: 1 and (d-2)(d+1)/2.
    CHECK(full_contract(p1, p1) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(full_contract(p0, p0) ==
          Catch::Approx(0.5 * (d - 2) * (d + 1)).epsilon(1e-12));

    CHECK(symmetry_violation(p0, Tensor4Symmetry::PairSymmetric) < 1e-14);
    CHECK_THROWS_AS(channel_form(2, k), std::invalid_argument);
}
