#pragma once

#include <cmath>
#include <functional>

#include "gravnoise/errors.hpp"
#include "gravnoise/quadrature.hpp"
#include "gravnoise/spectral.hpp"

namespace gravnoise {

// Weight function of (k0, s, k3) where s = |k_spatial|^2 and k3 is the
// longitudinal momentum component.
using SpectralWeight = std::function<double(double k0, double s, double k3)>;

// Integrate one channel of a density against a weight over the measure
// ds dk3 / 2 at fixed frequency k0 = omega:
//
//   - lightcone terms: delta(k^2) = delta(omega^2 - s) collapses the s
//     integral onto the shell s = omega^2; the remaining k3 integral over
//     [-|omega|, |omega|] uses the fixed 64-node Gauss-Legendre rule (the
//     shell integrands of interest are low-degree polynomials);
//   - interior terms: double integral over k3^2 <= s <= omega^2 - threshold
//     with (k^2)^p = (omega^2 - s)^p, by nested adaptive quadrature;
//   - principal-value terms are dispersive and have no place in a noise
//     integral; feeding one is a caller error.
//
// Frequency factors are evaluated at k0 = omega exactly, so full-kind
// densities integrate to zero for omega <= 0.
inline double integrate_against(const SpectralDensity& density, const SpectralWeight& weight,
                                double omega, int channel = 0, double rel_tol = 1e-6) {
    double total = 0.0;
    const double omega2 = omega * omega;

    for (const SpectralTerm& term : density.terms) {
        const double coeff = term.channel(channel).real();
        if (coeff == 0.0) continue;
        const double ff = freq_factor_value(term.freq, omega);
        if (ff == 0.0) continue;

        switch (term.support) {
            case Support::PrincipalValue:
                throw std::invalid_argument(
                    "integrate_against: principal-value terms are dispersive and cannot "
                    "be integrated against a noise weight");

            case Support::OnShell: {
                if (term.power >= Rational(1)) continue;  // delta(k^2) (k^2)^p = 0
                if (term.power != Rational(0)) {
                    throw QuadratureError(
                        "integrate_against: on-shell term with negative power of k^2 "
                        "is singular");
                }
                const double L = std::abs(omega);
                if (L == 0.0) continue;
                const double shell = gauss_legendre_64(
                    [&](double k3) { return 0.5 * weight(omega, omega2, k3); }, -L, L);
                total += coeff * ff * shell;
                break;
            }

            case Support::Interior: {
                const double s_max = omega2 - term.threshold;
                if (s_max <= 0.0) continue;
                const double L = std::sqrt(s_max);
                const double p = term.power.value();

                auto integrand = [&](double s, double k3) {
                    return 0.5 * std::pow(omega2 - s, p) * weight(omega, s, k3);
                };

                // Coarse magnitude scan.  It fixes absolute-error floors so
                // that integrands with sign cancellation terminate at an
                // honest error level instead of refining without bound.
                double peak = 0.0;
                for (int i = 0; i < 12; ++i) {
                    const double k3 = -L + 2.0 * L * (i + 0.5) / 12.0;
                    const double s_lo = k3 * k3;
                    if (s_lo >= s_max) continue;
                    for (int j = 0; j < 12; ++j) {
                        const double s = s_lo + (s_max - s_lo) * (j + 0.5) / 12.0;
                        peak = std::max(peak, std::abs(integrand(s, k3)));
                    }
                }
                const double char_scale = peak * 2.0 * L * s_max;

                QuadratureOptions inner_opt;
                inner_opt.rel_tol = 0.25 * rel_tol;
                inner_opt.abs_tol = 1e-3 * rel_tol * char_scale / std::max(2.0 * L, 1e-300);
                QuadratureOptions outer_opt;
                outer_opt.rel_tol = rel_tol;
                outer_opt.abs_tol = 1e-3 * rel_tol * char_scale;

                auto outer = [&](double k3) {
                    const double s_lo = k3 * k3;
                    if (s_lo >= s_max) return 0.0;
                    return adaptive_integrate([&](double s) { return integrand(s, k3); },
                                              s_lo, s_max, inner_opt);
                };
                total += coeff * ff * adaptive_integrate(outer, -L, L, outer_opt);
                break;
            }
        }
    }
    return total;
}

}  // namespace gravnoise
