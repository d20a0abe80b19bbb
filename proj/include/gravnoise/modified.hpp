#pragma once

#include <cmath>
#include <numbers>

#include "gravnoise/coupling.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/momentum.hpp"
#include "gravnoise/spectral.hpp"

namespace gravnoise {

// Phenomenological deformation of the gravitational coupling: an overall
// effective coupling kappa_eff plus a fractional enhancement delta_gamma1 of
// the trace channel.  delta_gamma1 = 0 is general relativity.
struct ModifiedGravity {
    double kappa_eff = 8.0 * std::numbers::pi;
    double delta_gamma1 = 0.0;

    // Channel factors multiplying the free response: 1 on the traceless
    // channel, 1 + delta_gamma1 on the trace channel.
    ChannelScalar channel_factor() const { return {1.0, 1.0 + delta_gamma1}; }
};

// Eddington parameter (d = 4): the ratio of spatial to temporal metric
// perturbations of a static point mass,
//   gamma = (1 + delta_gamma1 / 3) / (1 - delta_gamma1 / 3).
// The trace-channel pole at delta_gamma1 = 3 is reported, not regularized.
inline double eddington_gamma(const ModifiedGravity& mod) {
    const double denom = 1.0 - mod.delta_gamma1 / 3.0;
    if (std::abs(denom) < 1e-12) {
        throw NumericalError("eddington_gamma: pole at delta_gamma1 = 3");
    }
    return (1.0 + mod.delta_gamma1 / 3.0) / denom;
}

// Momentum-space metric of a static point mass, as the coefficients of
// 2 pi delta(k0) in h_00 and in each diagonal spatial component h_ii:
//   h_00 = (2 kappa_eff m / ((d-2) k^2)) (d - 3 - delta_gamma1 / (d-1))
//   h_ii = (2 kappa_eff m / ((d-2) k^2)) (1     + delta_gamma1 / (d-1))
// with k^2 = -|k_spatial|^2 < 0 for the static (k0 = 0) momentum.
struct PointMassCoefficients {
    double h00 = 0.0;
    double hii = 0.0;
};

inline PointMassCoefficients point_mass_metric(const ModifiedGravity& mod, double m,
                                               const Momentum& k_spatial) {
    const Dimension d(k_spatial.dim());
    if (d.value() < 4) {
        throw DimensionError("point_mass_metric: the static-source displays require d >= 4");
    }
    if (k_spatial.k0() != 0.0) {
        throw std::invalid_argument("point_mass_metric: momentum must be static (k0 = 0)");
    }
    const double k2 = k_spatial.k2();
    if (k2 == 0.0) {
        throw NullMomentumError("point_mass_metric: vanishing spatial momentum");
    }
    const double pref = 2.0 * mod.kappa_eff * m / ((d.value() - 2) * k2);
    const double dm1 = static_cast<double>(d.value() - 1);
    return {pref * (d.value() - 3 - mod.delta_gamma1 / dm1),
            pref * (1.0 + mod.delta_gamma1 / dm1)};
}

// Lightcone metric fluctuations under the modified coupling: the free
// graviton shell with the trace channel enhanced by 1 + delta_gamma1.
inline SpectralDensity modified_metric_density(const ModifiedGravity& mod,
                                               const PhysicalScales& scales, Dimension d) {
    PhysicalScales eff = scales;
    // proper_metric_spectrum scales with kappa = 8 pi G; express kappa_eff
    // through an effective Newton constant to reuse the builder.
    eff.G_newton = mod.kappa_eff / (8.0 * std::numbers::pi);
    return channel_scaled(proper_metric_spectrum(eff, d).density, mod.channel_factor());
}

// Curvature correlation coefficients of the modified lightcone fluctuations:
//   a = -2 pi kappa_eff (1 + delta_gamma1 / (d-1)) delta(k^2) / (d-2)
//   b =    pi kappa_eff delta(k^2)
// delta_gamma1 = 0 reproduces the free-graviton coefficients with kappa_eff.
inline RiemannSpectrum modified_riemann_coeffs(const ModifiedGravity& mod,
                                               const PhysicalScales& scales, Dimension d) {
    return riemann_coeffs_from_metric(modified_metric_density(mod, scales, d));
}

// The channel combination sum_r G^r / factor_r is sourceless under the
// modified coupling and its fluctuations must vanish structurally: dividing
// each channel of the quadratic density by factor_r^2 (one factor per slot)
// and applying the Einstein operator to both slots leaves only
// delta(k^2) (k^2)^2 terms, which are identically zero.  Returns the residual
// term count after simplification (0 = pass).
inline std::size_t modified_invariant_residual_terms(const ModifiedGravity& mod,
                                                     const PhysicalScales& scales,
                                                     Dimension d) {
    const ChannelScalar f = mod.channel_factor();
    const SpectralDensity den = modified_metric_density(mod, scales, d);
    const SpectralDensity combo = einstein_map(
        channel_scaled(den, {1.0 / (f.c0 * f.c0), 1.0 / (f.c1 * f.c1)}), 2);
    return simplified(combo).terms.size();
}

}  // namespace gravnoise
