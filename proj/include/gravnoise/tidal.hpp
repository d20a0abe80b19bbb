#pragma once

// Tidal-tensor noise spectra seen by a geodesic probe (d = 4).
//
// A probe moving with normalized velocity v along the third spatial axis
// has four-velocity direction K = K0 (1, 0, 0, v).  Contracting the
// conformal curvature structure of one Fourier mode twice with K gives the
// per-mode tidal coefficient Q_{mu rho}; its correlation inherits the
// (alpha, beta) channel structure of the curvature spectrum.  Averaging
// over the azimuth of the transverse momentum leaves six independent
// component spectra, which have closed polynomial forms in
// (omega, s = |k_spatial|^2, k3, v; alpha, beta).  This header provides the
// per-mode coefficient, the closed forms, an independent azimuth-quadrature
// oracle for them, and the on-shell integrands of the lightcone
// (gravitational-wave) channel.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravnoise/coupling.hpp"
#include "gravnoise/curvature.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/momentum.hpp"
#include "gravnoise/spectral.hpp"
#include "gravnoise/tensor.hpp"

namespace gravnoise {

// Probe kinematics.  K0 is the overall probe frequency scale; every
// spectrum is homogeneous of degree zero in K0, so it cancels.  It is kept
// as an explicit field to make that cancellation testable.
struct ProbeConfig {
    double v = 0.0;    // normalized velocity along the third spatial axis, in [0, 1]
    double tau = 1.0;  // one-way flight time, > 0
    double K0 = 1.0;   // probe frequency scale, > 0
};

inline void validate_probe(const ProbeConfig& probe) {
    if (!(probe.v >= 0.0 && probe.v <= 1.0))
        throw std::invalid_argument("probe: velocity must lie in [0, 1]");
    if (!(probe.tau > 0.0))
        throw std::invalid_argument("probe: flight time must be positive");
    if (!(probe.K0 > 0.0))
        throw std::invalid_argument("probe: frequency scale must be positive");
}

// Per-mode tidal coefficient in physical (contravariant) components.  The
// spatial block is
//
//   Q^{ik} = (k^i k^k (1 - v^2) - delta_ik u^2 - v (delta_{i3} k^k + k^i delta_{k3}) u) / 2,
//
// with u = k^0 - k^3 v the Doppler-shifted mode frequency, and the temporal
// row and column are fixed by the longitudinal entries:
//
//   Q^{00} = v^2 Q^{33},   Q^{0i} = v Q^{i3}.
//
// A co-propagating null probe (v = 1, k lightlike along axis 3) feels no
// tidal force: u and the transverse weights vanish and Q = 0.
inline Tensor2 tidal_coefficient(const Momentum& k, const ProbeConfig& probe) {
    if (k.dim() != 4)
        throw DimensionError("tidal_coefficient: probe kinematics are specific to d = 4");
    validate_probe(probe);
    const double v = probe.v;
    const double u = k.k0() - k[3] * v;
    Tensor2 q(Dimension(4), Variance::Contravariant, Variance::Contravariant);
    for (int i = 1; i <= 3; ++i) {
        for (int j = i; j <= 3; ++j) {
            double val = k[i] * k[j] * (1.0 - v * v);
            if (i == j) val -= u * u;
            double mixed = 0.0;
            if (i == 3) mixed += k[j];
            if (j == 3) mixed += k[i];
            val -= v * mixed * u;
            q(i, j) = 0.5 * val;
            q(j, i) = q(i, j);
        }
    }
    q(0, 0) = v * v * q(3, 3);
    for (int i = 1; i <= 3; ++i) {
        q(0, i) = v * q(i, 3);
        q(i, 0) = q(0, i);
    }
    return q;
}

// The six azimuth-averaged tidal component spectra at one support point,
// together with the channel inputs (alpha, beta) they were evaluated with.
// Q12' = (Q11 - Q22)/2 is the second transverse quadrupole and Q is the
// Lorentz trace -Q11 - Q22 - (1 - v^2) Q33.  The equalities c23 = c13 and
// c12p = c12 hold identically; both members are populated so that the
// oracle can confirm them by independent contraction.
struct TidalSpectra {
    double c33 = 0.0;   // C_{Q33 Q33}
    double c13 = 0.0;   // C_{Q13 Q13}
    double c23 = 0.0;   // C_{Q23 Q23}  (= c13)
    double c12 = 0.0;   // C_{Q12 Q12}
    double c12p = 0.0;  // C_{Q12' Q12'}  (= c12)
    double c33q = 0.0;  // cross spectrum C_{Q33 Q}
    double cqq = 0.0;   // C_{Q Q}
    double alpha = 0.0;
    double beta = 0.0;
};

// Closed polynomial forms of the six azimuth-averaged spectra.  Arguments:
// mode frequency omega, spatial momentum squared s >= k3^2, longitudinal
// momentum k3, and the pointwise channel values (alpha, beta) of the
// curvature correlation (lightcone-shell weights or interior densities).
inline TidalSpectra tidal_spectra_closed(double omega, double s, double k3,
                                         const ProbeConfig& probe, double alpha, double beta) {
    if (s < k3 * k3)
        throw std::invalid_argument(
            "tidal_spectra_closed: need s >= k3^2 (real transverse momentum)");
    const double v = probe.v;
    const double V = 1.0 - v * v;
    const double u = omega - k3 * v;       // Doppler-shifted mode frequency
    const double u2 = u * u;
    const double t = s - k3 * k3;          // transverse momentum squared
    const double w = omega * omega - k3 * k3;
    const double m = omega * omega - s;    // invariant k^2 of the mode
    const double tba = 2.0 * beta - alpha;

    TidalSpectra out;
    out.alpha = alpha;
    out.beta = beta;
    out.c33 = tba * w * w;
    out.c13 = 0.5 * (beta - alpha) * t * u2 - 0.5 * tba * t * w * V + beta * w * u2;
    out.c23 = out.c13;
    out.c12 = 0.125 * tba * t * t * V * V + beta * u2 * u2 - beta * u2 * t * V;
    out.c12p = out.c12;
    out.c33q = -tba * m * w * V - 2.0 * (beta - alpha) * t * u2 + 2.0 * alpha * m * u2;
    out.cqq = tba * m * m * V * V + 4.0 * (beta - alpha) * u2 * u2 - 4.0 * alpha * m * V * u2;
    return out;
}

namespace detail {

using Spatial3 = std::array<std::array<double, 3>, 3>;

inline double selector_trace(const Spatial3& a, const Spatial3& m) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += a[i][j] * m[j][i];
    return acc;
}

inline double selector_chain(const Spatial3& a, const Spatial3& m, const Spatial3& b) {
    // tr(a m b m) for the quadratic part of the correlation bilinear.
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) acc += a[i][j] * m[j][k] * b[k][l] * m[l][i];
    return acc;
}

// Correlation of two linear components A = tr(a Q), B = tr(b Q) of the
// tidal tensor under the channel-structured curvature correlation:
//
//   C_AB = -4 alpha tr(a Q) tr(b Q) + 8 beta tr(a Q b Q)
//
// for symmetric selectors; this is the (alpha, beta) rank-8 structure with
// all four curvature slots contracted into the probe direction.
inline double component_correlation(const Spatial3& a, const Spatial3& b, const Spatial3& q,
                                    double alpha, double beta) {
    return -4.0 * alpha * selector_trace(a, q) * selector_trace(b, q) +
           8.0 * beta * selector_chain(a, q, b);
}

}  // namespace detail

// Independent oracle for tidal_spectra_closed: contracts the conformal
// curvature structure of a mode k = (omega, p cos phi, p sin phi, k3),
// p = sqrt(s - k3^2), twice with the probe direction and averages the six
// component correlations over phi by the uniform midpoint rule.  The
// integrands are trigonometric polynomials of degree <= 4 in phi, so the
// rule is exact once the node count exceeds the degree; the result at
// n_samples nodes is compared against n_samples/2 nodes and a relative
// disagreement above 1e-6 reports insufficient sampling.
//
// The pointwise (alpha, beta) are read from the interior part of the
// supplied curvature-coefficient spectrum at (omega, k^2 = omega^2 - s);
// lightcone terms are distributional and have no pointwise value, so the
// oracle is meaningful off the shell (or for synthetic interior spectra).
inline TidalSpectra tidal_spectra_oracle(double omega, double s, double k3,
                                         const ProbeConfig& probe,
                                         const RiemannSpectrum& riemann, int n_samples = 64) {
    if (s < k3 * k3)
        throw std::invalid_argument(
            "tidal_spectra_oracle: need s >= k3^2 (real transverse momentum)");
    if (n_samples < 2)
        throw std::invalid_argument("tidal_spectra_oracle: need at least 2 azimuth nodes");
    validate_probe(probe);

    const AlphaBeta ab = curvature_alpha_beta(riemann);
    const double k2 = omega * omega - s;
    const double alpha = interior_value(ab.alpha, 0, omega, k2);
    const double beta = interior_value(ab.beta, 0, omega, k2);

    const double v = probe.v;
    const double V = 1.0 - v * v;
    const double p = std::sqrt(s - k3 * k3);
    const double K0 = probe.K0;

    using detail::Spatial3;
    const Spatial3 sel33{{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}};
    const Spatial3 sel13{{{0, 0, 0.5}, {0, 0, 0}, {0.5, 0, 0}}};
    const Spatial3 sel23{{{0, 0, 0}, {0, 0, 0.5}, {0, 0.5, 0}}};
    const Spatial3 sel12{{{0, 0.5, 0}, {0.5, 0, 0}, {0, 0, 0}}};
    const Spatial3 sel12p{{{0.5, 0, 0}, {0, -0.5, 0}, {0, 0, 0}}};
    const Spatial3 selq{{{-1, 0, 0}, {0, -1, 0}, {0, 0, -V}}};

    auto average = [&](int n) {
        std::array<double, 7> acc{};
        for (int node = 0; node < n; ++node) {
            const double phi = 2.0 * std::numbers::pi * (node + 0.5) / n;
            const Momentum k{omega, p * std::cos(phi), p * std::sin(phi), k3};
            const Tensor4 cr = conformal_riemann(k);

            // Spatial block of the probe contraction; the two metric signs
            // from raising the free indices cancel, so the covariant
            // contraction entries are the physical components directly.
            const double Kt = K0;
            const double Kz = K0 * v;
            Spatial3 q{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const int a = i + 1;
                    const int b = j + 1;
                    q[i][j] = (cr(a, 0, b, 0) * Kt * Kt + cr(a, 0, b, 3) * Kt * Kz +
                               cr(a, 3, b, 0) * Kz * Kt + cr(a, 3, b, 3) * Kz * Kz) /
                              (K0 * K0);
                }

            acc[0] += detail::component_correlation(sel33, sel33, q, alpha, beta);
            acc[1] += detail::component_correlation(sel13, sel13, q, alpha, beta);
            acc[2] += detail::component_correlation(sel23, sel23, q, alpha, beta);
            acc[3] += detail::component_correlation(sel12, sel12, q, alpha, beta);
            acc[4] += detail::component_correlation(sel12p, sel12p, q, alpha, beta);
            acc[5] += detail::component_correlation(sel33, selq, q, alpha, beta);
            acc[6] += detail::component_correlation(selq, selq, q, alpha, beta);
        }
        for (double& x : acc) x /= n;
        return acc;
    };

    const std::array<double, 7> fine = average(n_samples);
    const std::array<double, 7> coarse = average(n_samples / 2 > 0 ? n_samples / 2 : 1);

    double scale = 0.0;
    for (int i = 0; i < 7; ++i)
        scale = std::max({scale, std::abs(fine[i]), std::abs(coarse[i])});
    for (int i = 0; i < 7; ++i) {
        if (std::abs(fine[i] - coarse[i]) > 1e-6 * std::max(scale, 1e-300)) {
            throw QuadratureError(
                "tidal_spectra_oracle: azimuth average not converged at 1e-6; "
                "increase n_samples");
        }
    }

    TidalSpectra out;
    out.c33 = fine[0];
    out.c13 = fine[1];
    out.c23 = fine[2];
    out.c12 = fine[3];
    out.c12p = fine[4];
    out.c33q = fine[5];
    out.cqq = fine[6];
    out.alpha = alpha;
    out.beta = beta;
    return out;
}

// On-shell integrands of the five uncorrelated lightcone-channel
// components, per unit shell weight (alpha = beta = 1, s = omega^2).
// Multiplying by the lightcone weight of the curvature spectrum gives the
// physical integrand of the k3 shell integral.  The cross and trace
// spectra vanish identically on the shell with beta = alpha (the lightcone
// channel is Ricci-flat) and are therefore not part of the return value.
struct GwComponentSpectra {
    double c33 = 0.0;
    double c13 = 0.0;
    double c23 = 0.0;
    double c12 = 0.0;
    double c12p = 0.0;
};

inline GwComponentSpectra gw_component_spectra(double omega, double k3,
                                               const ProbeConfig& probe) {
    if (!(std::abs(k3) <= omega))
        throw std::invalid_argument("gw_component_spectra: need |k3| <= omega on the shell");
    const TidalSpectra t = tidal_spectra_closed(omega, omega * omega, k3, probe, 1.0, 1.0);
    return {t.c33, t.c13, t.c23, t.c12, t.c12p};
}

}  // namespace gravnoise
