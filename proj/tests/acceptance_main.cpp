// Acceptance gate: twelve numbered criteria covering the exact coefficient
// tables, the algebraic identities, the dual evaluation paths, the coupled
// susceptibilities, the tidal oracle, the deviation-noise closed forms, the
// scaling law, the deformed-coupling displays and the structural vacuum
// properties.  One line is printed per criterion; the process exits 0 only
// if every criterion passes within its tolerance and time budget.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <limits>
#include <string>
#include <vector>

#include "gravnoise/gravnoise.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kThreads = 4;

struct Outcome {
    int number = 0;
    bool pass = false;
};

std::vector<Outcome> g_outcomes;

template <typename Body>
void criterion(int number, const char* title, double tolerance, double budget_seconds,
               Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    double observed = std::numeric_limits<double>::infinity();
    std::string error;
    try {
        observed = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool pass = error.empty() && observed <= tolerance;
    if (budget_seconds > 0.0 && seconds >= budget_seconds) pass = false;

    std::printf("[%s] %2d %-28s ", pass ? "PASS" : "FAIL", number, title);
    if (!error.empty()) {
        std::printf("exception: %s", error.c_str());
    } else {
        std::printf("observed %.3e  tolerance %.3e", observed, tolerance);
    }
    if (budget_seconds > 0.0) {
        std::printf("  (%.2fs of %.0fs)", seconds, budget_seconds);
    } else {
        std::printf("  (%.2fs)", seconds);
    }
    std::printf("\n");
    std::fflush(stdout);
    g_outcomes.push_back({number, pass});
}

// Exact equality of the fixed-dimension coefficient table entries.
double exact_coefficient_table() {
    using gravnoise::Dimension;
    using gravnoise::ExactChannel;
    using gravnoise::PiPower;
    using gravnoise::Rational;

    bool ok = true;
    const auto expect = [&](const PiPower& got, const Rational& coeff, int half_pi) {
        ok = ok && got == PiPower(coeff, half_pi);
    };

    const ExactChannel s4 = gravnoise::zeta_scalar_massless_exact(Dimension(4));
    expect(s4.c0, Rational(1, 960), -4);
    expect(s4.c1, Rational(1, 96), -4);

    const ExactChannel m4 = gravnoise::zeta_maxwell_exact(Dimension(4));
    expect(m4.c0, Rational(1, 80), -4);
    ok = ok && m4.c1.is_zero();

    const ExactChannel n4 = gravnoise::zeta_neutrino_exact(Dimension(4));
    expect(n4.c0, Rational(1, 320), -4);
    ok = ok && n4.c1.is_zero();

    const ExactChannel s2 = gravnoise::zeta_scalar_massless_exact(Dimension(2));
    expect(s2.c0, Rational(1, 24), -2);
    ok = ok && s2.c1.is_zero();

    const ExactChannel m2 = gravnoise::zeta_maxwell_exact(Dimension(2));
    expect(m2.c0, Rational(-1, 4), -2);

    const ExactChannel n2 = gravnoise::zeta_neutrino_exact(Dimension(2));
    expect(n2.c0, Rational(-1, 16), -2);

    // Frozen decimal renderings guard the exact-arithmetic printer as well.
    ok = ok && s4.c0.str() == "1/(960*pi^2)";
    ok = ok && m4.c0.str() == "1/(80*pi^2)";
    ok = ok && s2.c0.str() == "1/(24*pi)";
    ok = ok && m2.c0.str() == "-1/(4*pi)";
    return ok ? 0.0 : 1.0;
}

// The general-dimension coefficient formulas reduce to the fixed table at
// d = 4 by exact arithmetic, and the cross-species ratios hold for all d.
double general_dimension_reduction() {
    using gravnoise::Dimension;
    using gravnoise::ExactChannel;
    using gravnoise::PiPower;
    using gravnoise::Rational;

    bool ok = true;
    for (int d = 3; d <= 8; ++d) {
        const ExactChannel s = gravnoise::zeta_scalar_massless_exact(Dimension(d));
        const ExactChannel m = gravnoise::zeta_maxwell_exact(Dimension(d));
        const ExactChannel n = gravnoise::zeta_neutrino_exact(Dimension(d));
        // Traceless/trace ratio (d-2)^2 (d+1) / 2 for the scalar.
        ok = ok && s.c1 == s.c0 * Rational((d - 2) * (d - 2) * (d + 1), 2);
        // Maxwell weights as rational multiples of the scalar base.
        ok = ok && m.c0 == s.c0 * Rational(2 * d * d - 3 * d - 8);
        ok = ok && m.c1 == s.c0 * Rational((d - 4) * (d - 4) * (d - 2) * (d + 1), 2);
        // One neutrino field carries a quarter of the Maxwell noise.
        ok = ok && n.c0 == m.c0 * Rational(1, 4);
        ok = ok && n.c1 == m.c1 * Rational(1, 4);
    }
    // Evaluated at d = 4 the general route lands on the frozen table.
    const ExactChannel s4 = gravnoise::zeta_scalar_massless_exact(Dimension(4));
    ok = ok && s4.c1 == s4.c0 * Rational(10);
    ok = ok && gravnoise::zeta_maxwell_exact(Dimension(4)).c1.is_zero();
    ok = ok && s4.c0 == PiPower(Rational(1, 960), -4);
    return ok ? 0.0 : 1.0;
}

}  // namespace

int main() {
    namespace checks = gravnoise::checks;

    std::printf("acceptance suite (seed %llu)\n",
                static_cast<unsigned long long>(kSeed));

    criterion(1, "exact-coefficient-table", 0.0, 1.0,
              [] { return exact_coefficient_table(); });

    criterion(2, "general-dimension-reduction", 0.0, 0.0,
              [] { return general_dimension_reduction(); });

    criterion(3, "projector-channel-algebra", 1e-10, 10.0, [] {
        return std::max(checks::projector_algebra(kSeed, 100),
                        checks::contraction_identities(kSeed, 100));
    });

    criterion(4, "gauge-invariance-zeros", 1e-12, 0.0,
              [] { return checks::gauge_zeros(kSeed, 100); });

    criterion(5, "dual-path-equivalence", 1e-10, 0.0, [] {
        return std::max(checks::polarization_dual_path(kSeed, 100, 0.0),
                        checks::density_quadratic_form(kSeed, 100));
    });

    criterion(6, "coupled-susceptibilities", 1e-12, 0.0, [] {
        return std::max({checks::gamma_low_frequency(),
                         checks::gamma_linear_solve(kSeed, 100),
                         checks::stochastic_identities()});
    });

    criterion(7, "tidal-closed-vs-oracle", 1e-6, 60.0,
              [] { return checks::tidal_closed_vs_oracle(kSeed, 50); });

    criterion(8, "gw-ricci-flatness", 0.0, 0.0,
              [] { return checks::gw_ricci_flatness(kSeed, 100); });

    // Normalized margins: each sub-check divided by its own tolerance
    // (longitudinal 0.5%, transverse ratio 0.5%, trace closed form 1%).
    criterion(9, "slow-probe-noise-limits", 1.0, 120.0, [] {
        const std::vector<double> grid =
            gravnoise::omega_grid({0.1, 10.0, 25, gravnoise::GridSpacing::Log});
        const std::vector<double> trace_grid =
            gravnoise::omega_grid({0.1, 10.0, 7, gravnoise::GridSpacing::Log});
        double margin =
            checks::deviation_slow_probe_longitudinal(grid, 1.0, 3, kThreads) / 5e-3;
        margin = std::max(margin,
                          checks::deviation_transverse_ratio(grid, 1.0, kThreads) / 5e-3);
        for (int n_nu : {0, 3}) {
            margin = std::max(
                margin, checks::deviation_trace_vacuum(trace_grid, 1.0, n_nu, kThreads) / 1e-2);
        }
        return margin;
    });

    criterion(10, "vacuum-channel-suppression", 5e-2, 0.0, [] {
        const std::vector<double> grid =
            gravnoise::omega_grid({1e-3, 1e-1, 5, gravnoise::GridSpacing::Log});
        return std::max(checks::scaling_suppression(grid, 0),
                        checks::scaling_suppression(grid, 3));
    });

    // Normalized margins: Eddington series 1e-6, point-mass ratio 1e-12,
    // exact general-relativity limit of the deformed coupling.
    criterion(11, "deformed-coupling-displays", 1.0, 0.0, [] {
        double margin = checks::eddington_consistency() / 1e-6;
        margin = std::max(margin, checks::point_mass_ratio(kSeed, 100) / 1e-12);
        const double gr = checks::modified_gr_limit();
        if (gr != 0.0) margin = std::numeric_limits<double>::infinity();
        return margin;
    });

    criterion(12, "structural-vacuum-properties", 0.0, 0.0, [] {
        return std::max(
            checks::anomaly_structure(),
            checks::structural_supports(gravnoise::default_config().content));
    });

    int passed = 0;
    for (const Outcome& o : g_outcomes)
        if (o.pass) ++passed;
    std::printf("acceptance: %d/%zu criteria passed\n", passed, g_outcomes.size());
    return (passed == static_cast<int>(g_outcomes.size()) && passed == 12) ? 0 : 1;
}
