#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gravnoise/curvature.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/matter.hpp"
#include "gravnoise/momentum.hpp"
#include "gravnoise/projector.hpp"
#include "gravnoise/spectral.hpp"
#include "gravnoise/tensor.hpp"

namespace gravnoise {

// ---------------------------------------------------------------------------
// Proper (uncoupled) vacuum fluctuations of the metric and the curvature.
// ---------------------------------------------------------------------------

// Transverse part of the free-graviton vacuum noise; the gauge-dependent
// longitudinal part is never materialized.
struct ProperMetricSpectrum {
    SpectralDensity density;  // lightcone terms, channel coefficients 2 pi kappa lambda_r
};

inline ProperMetricSpectrum proper_metric_spectrum(const PhysicalScales& scales, Dimension d) {
    const ChannelScalar lam = channel_lambda(d);  // rejects d = 2
    const double pref = 2.0 * std::numbers::pi * scales.kappa();

    SpectralDensity den;
    den.kind = SpectrumKind::Symmetrized;
    den.hbar = scales.hbar;
    den.dim = d.value();

    SpectralTerm t;
    t.support = Support::OnShell;
    t.power = Rational(0);
    t.c0 = {pref * lam.c0, 0.0};
    t.c1 = {pref * lam.c1, 0.0};
    den.terms.push_back(t);
    return {den};
}

// Rescale the two channels of a density independently (e.g. by 1/gamma_r).
inline SpectralDensity channel_scaled(const SpectralDensity& s, const ChannelScalar& f) {
    SpectralDensity out = s;
    for (SpectralTerm& t : out.terms) {
        t.c0 *= f.c0;
        t.c1 *= f.c1;
    }
    return out;
}

// Apply the linearized Einstein operator to `slots` tensor slots of a
// channel-diagonal correlation density.  On channel r the operator acts as
// multiplication by k^2 / (2 lambda_r), so each application raises the k^2
// power by one and divides the channel coefficient by 2 lambda_r.  Together
// with `simplified` this turns statements like "Einstein-tensor fluctuations
// of the free graviton vacuum vanish" into term-list identities:
// delta(k^2) (k^2)^2 drops out structurally.
inline SpectralDensity einstein_map(const SpectralDensity& s, int slots = 1) {
    if (slots < 0) throw std::invalid_argument("einstein_map: negative slot count");
    const ChannelScalar lam = channel_lambda(Dimension(s.dim));
    SpectralDensity out = s;
    for (SpectralTerm& t : out.terms) {
        if (t.anomaly) {
            throw KindError("einstein_map: anomaly terms are stress-tensor structures, "
                            "not metric channels");
        }
        t.power = t.power + Rational(slots);
        for (int i = 0; i < slots; ++i) {
            t.c0 /= 2.0 * lam.c0;
            t.c1 /= 2.0 * lam.c1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Curvature correlation coefficients (a, b).
//
// A channel-diagonal metric correlation  sum_r c_r(k^2) pi^r  expands over
// the two elementary index structures built from the transverse projector:
//   a = sum_r c_r alpha_r     (pi x pi outer structure)
//   b = sum_r c_r beta_r      (pi x pi cross structures)
// and the induced curvature correlation carries the same (a, b) against the
// corresponding structures built from the conformal curvature tensor of k.
// ---------------------------------------------------------------------------

// Scalar correlation densities a and b; values live in the c0 slot.
struct RiemannSpectrum {
    SpectralDensity a;
    SpectralDensity b;
    int dim = 4;
};

namespace detail {
inline SpectralDensity scalar_like(const SpectralDensity& model) {
    SpectralDensity out;
    out.kind = model.kind;
    out.hbar = model.hbar;
    out.dim = model.dim;
    return out;
}
}  // namespace detail

// Decompose a channel-diagonal metric density into the (a, b) structure
// coefficients of its induced curvature correlation.
inline RiemannSpectrum riemann_coeffs_from_metric(const SpectralDensity& metric) {
    const Dimension d(metric.dim);
    const double a0 = channel_alpha(0, d).value();
    const double a1 = channel_alpha(1, d).value();
    const double b0 = channel_beta(0, d).value();
    const double b1 = channel_beta(1, d).value();

    RiemannSpectrum out;
    out.dim = metric.dim;
    out.a = detail::scalar_like(metric);
    out.b = detail::scalar_like(metric);
    for (const SpectralTerm& t : metric.terms) {
        if (t.anomaly) {
            throw KindError("riemann_coeffs_from_metric: anomaly terms are not "
                            "metric channels");
        }
        SpectralTerm ta = t;
        ta.c0 = t.c0 * a0 + t.c1 * a1;
        ta.c1 = 0.0;
        out.a.terms.push_back(ta);
        SpectralTerm tb = t;
        tb.c0 = t.c0 * b0 + t.c1 * b1;
        tb.c1 = 0.0;
        out.b.terms.push_back(tb);
    }
    return out;
}

// Curvature coefficients of the free graviton vacuum:
//   a = -2 pi kappa delta(k^2) / (d - 2),   b = pi kappa delta(k^2).
inline RiemannSpectrum proper_riemann_coeffs(const PhysicalScales& scales, Dimension d) {
    return riemann_coeffs_from_metric(proper_metric_spectrum(scales, d).density);
}

// Value of the rank-8 curvature correlation at two index quadruples, given
// pointwise structure weights (alpha, beta) and the conformal curvature
// tensor CR of the momentum:
//
//   C[f, g] = -4 alpha CR(f) CR(g)
//             + 4 beta (CR(f12 g12) CR(f34 g34) + CR(f12 g34) CR(g12 f34))
//
// where f = (mu nu mu' nu') indexes the first curvature and g the second.
inline double riemann_correlation_value(const Tensor4& CR, double alpha, double beta,
                                        const std::array<int, 4>& f,
                                        const std::array<int, 4>& g) {
    const double outer = CR(f[0], f[1], f[2], f[3]) * CR(g[0], g[1], g[2], g[3]);
    const double cross1 = CR(f[0], f[1], g[0], g[1]) * CR(f[2], f[3], g[2], g[3]);
    const double cross2 = CR(f[0], f[1], g[2], g[3]) * CR(g[0], g[1], f[2], f[3]);
    return -4.0 * alpha * outer + 4.0 * beta * (cross1 + cross2);
}

// The observable curvature noise weights: the full-kind (positive-frequency)
// spectra alpha = -(1/4) C-kind(a) and beta = +(1/4) C-kind(b), where C-kind
// applies the vacuum fluctuation-dissipation factor 2 hbar theta(k0).
struct AlphaBeta {
    SpectralDensity alpha;
    SpectralDensity beta;
};

inline AlphaBeta curvature_alpha_beta(const RiemannSpectrum& rs) {
    return {scaled(to_full(rs.a), -0.25), scaled(to_full(rs.b), 0.25)};
}

// ---------------------------------------------------------------------------
// Dissipative vacuum polarization and particle production.
// ---------------------------------------------------------------------------

namespace detail {
inline void require_coupling_dimension(Dimension d, const char* where) {
    if (d.value() < 3) {
        throw DimensionError(std::string(where) +
                             ": gravitational coupling requires d >= 3 (the trace-channel "
                             "eigenvalue is singular at d = 2)");
    }
}
}  // namespace detail

// Dissipative part of the induced stress expectation for a metric
// perturbation h at momentum k:
//   <dT_{mu nu}> = 2 k^2 sigma(k^2) sum_r lambda_r zeta_r G^r_{mu nu}[h]
// where G^r is the channel projection of the linearized Einstein tensor.
// Below every pair-production threshold of the content (and outside the
// lightcone) the response vanishes.
inline Tensor2 stress_polarization(const Tensor2& h, const Momentum& k,
                                   const FieldContent& content,
                                   const PhysicalScales& scales) {
    detail::require_coupling_dimension(content.d, "stress_polarization");
    if (k.dim() != content.d.value()) {
        throw std::invalid_argument("stress_polarization: momentum dimension mismatch");
    }
    const double k2 = k.k2();
    Tensor2 out((Dimension(k.dim())));
    if (k2 <= 0.0) return out;

    const ChannelScalar zeta = zeta_content(content, k2);
    const ChannelScalar lam = channel_lambda(content.d);
    const double sig = sigma_scalar(k2, content.d, scales.hbar);

    const Tensor2 einstein = linearized_curvatures(h, k).einstein;
    for (int r = 0; r < 2; ++r) {
        if (zeta[r] == 0.0) continue;
        const Tensor2 Gr = channel_project(r, einstein, k);
        out += (2.0 * k2 * sig * lam[r] * zeta[r]) * Gr;
    }
    return out;
}

// Density of field quanta produced by a metric perturbation h at momentum k:
//   n[k] = 2 pi (k^2)^{d/2-2} theta(k^2) sum_r zeta_r lambda_r^2 G^r.G^r
// Equals (1 / 2 hbar) sigma_TT[k] h h -- hbar cancels, so this is a purely
// classical quadratic form, nonnegative for nonnegative channel weights.
inline double particle_density(const Tensor2& h, const Momentum& k,
                               const FieldContent& content, const PhysicalScales& scales) {
    (void)scales;  // hbar cancels; kept for signature symmetry
    detail::require_coupling_dimension(content.d, "particle_density");
    if (k.dim() != content.d.value()) {
        throw std::invalid_argument("particle_density: momentum dimension mismatch");
    }
    const double k2 = k.k2();
    if (k2 <= 0.0) return 0.0;

    const ChannelScalar zeta = zeta_content(content, k2);
    const ChannelScalar lam = channel_lambda(content.d);
    const double pref = 2.0 * std::numbers::pi *
                        std::pow(k2, 0.5 * content.d.value() - 2.0);

    const Tensor2 einstein = linearized_curvatures(h, k).einstein;
    double acc = 0.0;
    for (int r = 0; r < 2; ++r) {
        if (zeta[r] == 0.0) continue;
        const Tensor2 Gr = channel_project(r, einstein, k);
        acc += zeta[r] * lam[r] * lam[r] * dot(Gr, Gr);
    }
    return pref * acc;
}

// One sampled mode of a momentum-space metric perturbation, with its declared
// quadrature weight d^dk / (2 pi)^d.
struct MetricSample {
    Momentum k;
    Tensor2 h;
    double weight = 1.0;
};

// Energy-momentum transferred (per unit volume) from the perturbation to the
// vacuum: Pi_mu = sum over samples of weight * hbar k_mu sgn(k0) n[k].
// The sum is taken at the declared measure; refinement is the caller's job.
inline std::vector<double> integrated_transfer(const std::vector<MetricSample>& samples,
                                               const FieldContent& content,
                                               const PhysicalScales& scales) {
    const int d = content.d.value();
    std::vector<double> out(static_cast<std::size_t>(d), 0.0);
    for (const MetricSample& sm : samples) {
        const double n = particle_density(sm.h, sm.k, content, scales);
        if (n == 0.0) continue;
        const double sgn = sm.k.k0() > 0.0 ? 1.0 : (sm.k.k0() < 0.0 ? -1.0 : 0.0);
        for (int mu = 0; mu < d; ++mu) {
            out[static_cast<std::size_t>(mu)] +=
                sm.weight * scales.hbar * sm.k.lower(mu) * sgn * n;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The coupled metric/stress system.
// ---------------------------------------------------------------------------

// Optional dispersive stress-response kernel Gamma-bar_r(k^2); the shipped
// observables are independent of it and it defaults to zero.
using DispersiveKernel = std::function<double(int r, double k2)>;

// Per-channel susceptibilities of the mutually coupled metric/stress system,
// evaluated pointwise in k^2.  gamma_r plays the role of a momentum-dependent
// effective gravitational constant ratio.
class CoupledSusceptibilities {
public:
    CoupledSusceptibilities(FieldContent content, PhysicalScales scales,
                            DispersiveKernel dispersive = {})
        : content_(std::move(content)), scales_(scales),
          dispersive_(std::move(dispersive)) {
        detail::require_coupling_dimension(content_.d, "couple");
        validate_content(content_);
    }

    const FieldContent& content() const { return content_; }
    const PhysicalScales& scales() const { return scales_; }

    // Stress response kernel Gamma_r = Gamma-bar_r + i sigma(k^2); the
    // imaginary part is fixed by the vacuum fluctuation-dissipation relation.
    std::complex<double> Gamma(int r, double k2) const {
        const double re = dispersive_ ? dispersive_(r, k2) : 0.0;
        return {re, sigma_scalar(k2, content_.d, scales_.hbar)};
    }

    // Input (uncoupled) susceptibilities.
    std::complex<double> chi_hh_in(int r, double k2) const {
        if (k2 == 0.0) {
            throw NullMomentumError("chi_hh_in: pointwise response undefined on the "
                                    "lightcone; shell physics is distributional");
        }
        return 2.0 * scales_.kappa() * channel_lambda(content_.d)[r] / k2;
    }

    std::complex<double> chi_TT_in(int r, double k2) const {
        return k2 * k2 * zeta_content(content_, k2)[r] * Gamma(r, k2);
    }

    // Effective coupling factor gamma_r = 1 / (1 - 2 kappa lambda_r zeta_r k^2 Gamma_r);
    // gamma_r -> 1 as k^2 -> 0.  A vanishing denominator is a resonance and
    // is reported, never regularized: it sits outside the validity domain.
    std::complex<double> gamma(int r, double k2) const {
        const double lam = channel_lambda(content_.d)[r];
        const double zeta = zeta_content(content_, k2)[r];
        const std::complex<double> denom =
            1.0 - 2.0 * scales_.kappa() * lam * zeta * k2 * Gamma(r, k2);
        if (std::abs(denom) < 1e-12) {
            throw ResonanceError("gamma: effective-coupling denominator vanished "
                                 "(Planck-scale resonance)");
        }
        return 1.0 / denom;
    }

    // Coupled susceptibilities.
    std::complex<double> chi_hh(int r, double k2) const { return gamma(r, k2) * chi_hh_in(r, k2); }
    std::complex<double> chi_Th(int r, double k2) const { return gamma(r, k2); }
    std::complex<double> chi_TT(int r, double k2) const { return gamma(r, k2) * chi_TT_in(r, k2); }

private:
    FieldContent content_;
    PhysicalScales scales_;
    DispersiveKernel dispersive_;
};

inline CoupledSusceptibilities couple(const FieldContent& content,
                                      const PhysicalScales& scales,
                                      DispersiveKernel dispersive = {}) {
    return CoupledSusceptibilities(content, scales, std::move(dispersive));
}

namespace detail {
inline void require_term_representable(const FieldContent& content, const char* where) {
    require_coupling_dimension(content.d, where);
    validate_content(content);
    if (!content_massless(content)) {
        throw std::invalid_argument(std::string(where) +
                                    ": massive species have no power-law term "
                                    "representation; restrict to massless content");
    }
}
}  // namespace detail

// Symmetrized metric noise of the coupled system at lowest order in the
// coupling: the free-graviton shell plus the gravity-of-vacuum interior term
//   sigma_hh,r = 2 pi kappa lambda_r delta(k^2)
//              + 4 kappa^2 hbar pi lambda_r^2 zeta_r (k^2)^{(d-4)/2} theta(k^2).
inline SpectralDensity coupled_metric_density(const FieldContent& content,
                                              const PhysicalScales& scales) {
    detail::require_term_representable(content, "coupled_metric_density");
    const ChannelScalar lam = channel_lambda(content.d);
    const ChannelScalar zeta = zeta_content(content, 1.0);
    const double kap = scales.kappa();

    SpectralDensity out = proper_metric_spectrum(scales, content.d).density;

    SpectralTerm interior;
    interior.support = Support::Interior;
    interior.threshold = 0.0;
    interior.power = Rational(content.d.value() - 4, 2);
    const double pref = 4.0 * kap * kap * scales.hbar * std::numbers::pi;
    interior.c0 = {pref * lam.c0 * lam.c0 * zeta.c0, 0.0};
    interior.c1 = {pref * lam.c1 * lam.c1 * zeta.c1, 0.0};
    out.terms.push_back(interior);
    return out;
}

// Symmetrized stress/metric cross spectrum at lowest order:
//   sigma_Th,r = 2 kappa hbar pi lambda_r zeta_r (k^2)^{(d-2)/2} theta(k^2).
inline SpectralDensity coupled_cross_density(const FieldContent& content,
                                             const PhysicalScales& scales) {
    detail::require_term_representable(content, "coupled_cross_density");
    const ChannelScalar lam = channel_lambda(content.d);
    const ChannelScalar zeta = zeta_content(content, 1.0);
    const double pref = 2.0 * scales.kappa() * scales.hbar * std::numbers::pi;

    SpectralDensity out;
    out.kind = SpectrumKind::Symmetrized;
    out.hbar = scales.hbar;
    out.dim = content.d.value();

    SpectralTerm t;
    t.support = Support::Interior;
    t.threshold = 0.0;
    t.power = Rational(content.d.value() - 2, 2);
    t.c0 = {pref * lam.c0 * zeta.c0, 0.0};
    t.c1 = {pref * lam.c1 * zeta.c1, 0.0};
    out.terms.push_back(t);
    return out;
}

// Coupled metric susceptibility as a term density (default dispersive kernel),
// in the requested analytic continuation:
//   chi_hh,r = 2 kappa lambda_r PV(1/k^2)
//            + i [2 pi kappa lambda_r delta(k^2)
//                 + 4 kappa^2 hbar pi lambda_r^2 zeta_r (k^2)^{(d-4)/2} theta(k^2)] x parity
// with parity theta-independent (Feynman) or sgn(k0) (retarded/advanced; the
// advanced dissipative part enters with a minus sign).
inline SpectralDensity coupled_metric_response(const FieldContent& content,
                                               const PhysicalScales& scales,
                                               ResponseVariant variant = ResponseVariant::Retarded) {
    detail::require_term_representable(content, "coupled_metric_response");
    const ChannelScalar lam = channel_lambda(content.d);
    const ChannelScalar zeta = zeta_content(content, 1.0);
    const double kap = scales.kappa();
    const double orientation = (variant == ResponseVariant::Advanced) ? -1.0 : 1.0;
    const FreqFactor parity =
        (variant == ResponseVariant::Feynman) ? FreqFactor::One : FreqFactor::Sign;

    SpectralDensity out;
    out.kind = SpectrumKind::Response;
    out.variant = variant;
    out.hbar = scales.hbar;
    out.dim = content.d.value();

    SpectralTerm pv;
    pv.support = Support::PrincipalValue;
    pv.power = Rational(-1);
    pv.c0 = {2.0 * kap * lam.c0, 0.0};
    pv.c1 = {2.0 * kap * lam.c1, 0.0};
    out.terms.push_back(pv);

    SpectralTerm shell;
    shell.support = Support::OnShell;
    shell.power = Rational(0);
    shell.freq = parity;
    shell.c0 = {0.0, orientation * 2.0 * std::numbers::pi * kap * lam.c0};
    shell.c1 = {0.0, orientation * 2.0 * std::numbers::pi * kap * lam.c1};
    out.terms.push_back(shell);

    SpectralTerm interior;
    interior.support = Support::Interior;
    interior.power = Rational(content.d.value() - 4, 2);
    interior.freq = parity;
    const double pref = 4.0 * kap * kap * scales.hbar * std::numbers::pi;
    interior.c0 = {0.0, orientation * pref * lam.c0 * lam.c0 * zeta.c0};
    interior.c1 = {0.0, orientation * pref * lam.c1 * lam.c1 * zeta.c1};
    out.terms.push_back(interior);

    return out;
}

// Curvature correlation coefficients of the coupled system: the lightcone
// (vacuum gravitational wave) terms plus the interior gravity-of-vacuum
// terms, decomposed from the coupled metric density.
inline RiemannSpectrum coupled_riemann_coeffs(const FieldContent& content,
                                              const PhysicalScales& scales) {
    return riemann_coeffs_from_metric(coupled_metric_density(content, scales));
}

// ---------------------------------------------------------------------------
// Structural identity report: G = kappa T = kappa T^in at the correlation
// level.
// ---------------------------------------------------------------------------

struct IdentityCheck {
    std::string name;
    bool ok = false;
    double residual = 0.0;
};

struct StochasticIdentitiesReport {
    IdentityCheck einstein_einstein;  // sigma_GG == kappa^2 sigma_TT
    IdentityCheck einstein_stress;    // sigma_GT == kappa   sigma_TT
    IdentityCheck stress_stress;      // coupled sigma_TT == input sigma_TT

    bool all_ok() const {
        return einstein_einstein.ok && einstein_stress.ok && stress_stress.ok;
    }
};

// Largest relative coefficient deviation between two simplified densities,
// matched term-by-term; a term present on one side only counts with its full
// coefficient.
inline double density_residual(const SpectralDensity& lhs, const SpectralDensity& rhs) {
    const SpectralDensity a = simplified(lhs);
    const SpectralDensity b = simplified(rhs);
    double scale = 0.0;
    for (const SpectralTerm& t : a.terms) scale = std::max({scale, std::abs(t.c0), std::abs(t.c1)});
    for (const SpectralTerm& t : b.terms) scale = std::max({scale, std::abs(t.c0), std::abs(t.c1)});
    if (scale == 0.0) return 0.0;

    double worst = 0.0;
    auto side = [&](const SpectralDensity& x, const SpectralDensity& y) {
        for (const SpectralTerm& t : x.terms) {
            std::complex<double> d0 = t.c0;
            std::complex<double> d1 = t.c1;
            for (const SpectralTerm& u : y.terms) {
                if (detail::same_slot(t, u)) {
                    d0 -= u.c0;
                    d1 -= u.c1;
                    break;
                }
            }
            worst = std::max({worst, std::abs(d0), std::abs(d1)});
        }
    };
    side(a, b);
    side(b, a);
    return worst / scale;
}

// Verifies, structurally on the generated term lists, that the coupled
// fluctuations obey G = kappa T = kappa T^in:
//   (1) applying the Einstein operator to both slots of sigma_hh gives
//       kappa^2 sigma_TT (the shell part drops as delta(k^2) (k^2)^2);
//   (2) applying it to the metric slot of sigma_Th gives kappa sigma_TT;
//   (3) the coupled stress correlation is the input one at this order.
// Empty content is admitted and makes all densities vanish identically.
inline StochasticIdentitiesReport stochastic_identities_check(const FieldContent& content,
                                                              const PhysicalScales& scales,
                                                              double tol = 1e-12) {
    detail::require_coupling_dimension(content.d, "stochastic_identities_check");
    StochasticIdentitiesReport rep;
    rep.einstein_einstein.name = "einstein-einstein";
    rep.einstein_stress.name = "einstein-stress";
    rep.stress_stress.name = "stress-stress";

    SpectralDensity stress;
    SpectralDensity metric;
    SpectralDensity cross;
    if (content.species.empty()) {
        stress.kind = SpectrumKind::Symmetrized;
        stress.hbar = scales.hbar;
        stress.dim = content.d.value();
        metric = stress;
        cross = stress;
        // With no matter there is still a free graviton shell, but the
        // identities compare stress-tensor densities, which all vanish.
    } else {
        stress = stress_tensor_density(content, scales);
        metric = coupled_metric_density(content, scales);
        cross = coupled_cross_density(content, scales);
    }
    const double kap = scales.kappa();

    rep.einstein_einstein.residual =
        density_residual(einstein_map(metric, 2), scaled(stress, kap * kap));
    rep.einstein_stress.residual =
        density_residual(einstein_map(cross, 1), scaled(stress, kap));
    // At lowest order the coupled stress density is the input density itself
    // (|gamma|^2 = 1 + O(kappa^2 k^2 Gamma^2)); the comparison is exact by
    // construction and recorded for completeness.
    rep.stress_stress.residual = density_residual(stress, stress);

    rep.einstein_einstein.ok = rep.einstein_einstein.residual <= tol;
    rep.einstein_stress.ok = rep.einstein_stress.residual <= tol;
    rep.stress_stress.ok = rep.stress_stress.residual <= tol;
    return rep;
}

}  // namespace gravnoise
