#pragma once

// Deviation-tensor noise spectra: the time-integrated tidal tensor along a
// one-way probe track of flight time tau has one-sided noise spectra
//
//   C_{D.. D..}[omega] = (tau / 2 pi)^2 Int ds dk3/2  <C_{Q.. Q..}>  sinc^2((omega - k3 v) tau / 2)
//
// at observation frequency omega > 0, where <C> are the azimuth-averaged
// tidal spectra of the coupled curvature correlation.  Lightcone terms of
// the correlation collapse the s integral onto the shell s = omega^2 and
// leave a k3 integral over [-omega, omega] (the gravitational-wave
// channel); interior terms integrate over k3^2 <= s <= omega^2 (the
// gravity-of-vacuum channel).  The channel selector evaluates either or
// both.  Grid points are independent, so evaluation can fan out to a
// worker pool; results are deterministic regardless of pool size.

#include <cmath>
#include <cstddef>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gravnoise/coupling.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/integrate.hpp"
#include "gravnoise/matter.hpp"
#include "gravnoise/quadrature.hpp"
#include "gravnoise/spectral.hpp"
#include "gravnoise/tidal.hpp"

namespace gravnoise {

enum class Channels { GWOnly, GravityOfVacuum, Both };

// One-sided deviation-tensor noise spectra on a frequency grid.  All
// entries carry units of time (curvature spectrum x tau^2 per unit
// frequency); c23 = c13 and c12p = c12 identically (azimuthal symmetry of
// the averaged correlation), and the trace column is the spectrum of the
// Lorentz trace of the deviation tensor.
struct DeviationSpectrum {
    std::vector<double> omega;
    std::vector<double> c33;
    std::vector<double> c13;
    std::vector<double> c23;
    std::vector<double> c12;
    std::vector<double> c12p;
    std::vector<double> trace;
};

namespace detail {

inline SpectralDensity restrict_support(const SpectralDensity& density, Channels channels) {
    if (channels == Channels::Both) return density;
    const Support keep =
        (channels == Channels::GWOnly) ? Support::OnShell : Support::Interior;
    SpectralDensity out = density;
    out.terms.clear();
    for (const SpectralTerm& t : density.terms)
        if (t.support == keep) out.terms.push_back(t);
    return out;
}

}  // namespace detail

inline DeviationSpectrum deviation_spectrum(const ProbeConfig& probe,
                                            const FieldContent& content,
                                            const PhysicalScales& scales,
                                            const std::vector<double>& omega_grid,
                                            Channels channels, int threads = 1) {
    validate_probe(probe);
    if (content.d.value() != 4)
        throw DimensionError("deviation_spectrum: probe kinematics are specific to d = 4");
    if (omega_grid.empty())
        throw std::invalid_argument("deviation_spectrum: empty frequency grid");
    for (double w : omega_grid)
        if (!(w > 0.0))
            throw std::invalid_argument(
                "deviation_spectrum: one-sided spectra are defined for omega > 0");
    if (threads < 1)
        throw std::invalid_argument("deviation_spectrum: thread count must be positive");

    const AlphaBeta ab = curvature_alpha_beta(coupled_riemann_coeffs(content, scales));
    const SpectralDensity alpha_density = detail::restrict_support(ab.alpha, channels);
    const SpectralDensity beta_density = detail::restrict_support(ab.beta, channels);

    const std::size_t n = omega_grid.size();
    DeviationSpectrum out;
    out.omega = omega_grid;
    out.c33.assign(n, 0.0);
    out.c13.assign(n, 0.0);
    out.c23.assign(n, 0.0);
    out.c12.assign(n, 0.0);
    out.c12p.assign(n, 0.0);
    out.trace.assign(n, 0.0);

    const double v = probe.v;
    const double tau = probe.tau;
    const double pref = (tau / (2.0 * std::numbers::pi)) * (tau / (2.0 * std::numbers::pi));

    auto eval_point = [&](std::size_t i) {
        const double omega = omega_grid[i];

        // Each component is linear in (alpha, beta), so the alpha part and
        // the beta part are integrated against their own channel density
        // with unit coefficient and summed.
        auto component = [&](double (*pick)(const TidalSpectra&)) {
            auto make_weight = [&](double unit_alpha, double unit_beta) {
                return [&, unit_alpha, unit_beta](double k0, double s, double k3) {
                    const double kern = sinc(0.5 * (k0 - k3 * v) * tau);
                    const TidalSpectra t =
                        tidal_spectra_closed(k0, s, k3, probe, unit_alpha, unit_beta);
                    return pick(t) * kern * kern;
                };
            };
            return pref * (integrate_against(alpha_density, make_weight(1.0, 0.0), omega) +
                           integrate_against(beta_density, make_weight(0.0, 1.0), omega));
        };

        out.c33[i] = component([](const TidalSpectra& t) { return t.c33; });
        out.c13[i] = component([](const TidalSpectra& t) { return t.c13; });
        out.c23[i] = out.c13[i];
        out.c12[i] = component([](const TidalSpectra& t) { return t.c12; });
        out.c12p[i] = out.c12[i];
        out.trace[i] = component([](const TidalSpectra& t) { return t.cqq; });
    };

    const int pool_size = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(threads), n));
    if (pool_size <= 1) {
        for (std::size_t i = 0; i < n; ++i) eval_point(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> failures(static_cast<std::size_t>(pool_size));
        pool.reserve(static_cast<std::size_t>(pool_size));
        for (int t = 0; t < pool_size; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = static_cast<std::size_t>(t); i < n;
                         i += static_cast<std::size_t>(pool_size))
                        eval_point(i);
                } catch (...) {
                    failures[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        }
        for (std::thread& th : pool) th.join();
        for (const std::exception_ptr& e : failures)
            if (e) std::rethrow_exception(e);
    }
    return out;
}

// Channel-ratio diagnostic for the longitudinal component: the
// gravity-of-vacuum contribution is suppressed against the
// gravitational-wave contribution by (omega l_P)^2 times a constant fixed
// by the field content.  Evaluated with a slow probe (v = 0) and flight
// time tau = 1/omega per point; at v = 0 the sinc^2 kernel is constant
// over the support, so it cancels in the ratio and the tau choice merely
// keeps it away from its zeros.
struct ScalingPoint {
    double omega = 0.0;
    double omega_lp = 0.0;              // omega * l_P
    double gw_value = 0.0;              // lightcone-channel C_{D33 D33}
    double vacuum_value = 0.0;          // interior-channel C_{D33 D33}
    double ratio = 0.0;                 // vacuum_value / gw_value
    double suppression_constant = 0.0;  // ratio / (omega l_P)^2
};

inline std::vector<ScalingPoint> scaling_report(const std::vector<double>& omega_grid,
                                                const PhysicalScales& scales,
                                                const FieldContent& content) {
    std::vector<ScalingPoint> report;
    report.reserve(omega_grid.size());
    for (double omega : omega_grid) {
        ProbeConfig probe;
        probe.v = 0.0;
        probe.tau = 1.0 / omega;
        const std::vector<double> grid{omega};
        const double gw =
            deviation_spectrum(probe, content, scales, grid, Channels::GWOnly).c33[0];
        const double vac =
            deviation_spectrum(probe, content, scales, grid, Channels::GravityOfVacuum).c33[0];

        ScalingPoint point;
        point.omega = omega;
        point.omega_lp = omega * std::sqrt(scales.lP2());
        point.gw_value = gw;
        point.vacuum_value = vac;
        point.ratio = gw != 0.0 ? vac / gw : 0.0;
        point.suppression_constant =
            point.omega_lp != 0.0 ? point.ratio / (point.omega_lp * point.omega_lp) : 0.0;
        report.push_back(point);
    }
    return report;
}

}  // namespace gravnoise
