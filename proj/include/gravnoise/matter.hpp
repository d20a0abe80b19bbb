#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gravnoise/dimension.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/projector.hpp"
#include "gravnoise/rational.hpp"
#include "gravnoise/spectral.hpp"

namespace gravnoise {

// ---------------------------------------------------------------------------
// Per-species channel coefficients zeta_r: the dimensionless weights of the
// two channels of the vacuum stress-tensor noise spectrum, for every
// supported field species and dimension.  Massless coefficients are computed
// in exact rational * pi-power form and converted to floating point only at
// the evaluation boundary.
// ---------------------------------------------------------------------------

struct ExactChannel {
    PiPower c0;  // traceless channel (r = 0)
    PiPower c1;  // trace channel (r = 1)

    ChannelScalar value() const { return {c0.value(), c1.value()}; }
};

namespace detail {
// Common prefactor (4 pi)^(-d/2) Gamma(d/2 + 1) / Gamma(d + 2).  Note
// 4^(-d/2) = 2^(-d) is rational for every integer d, so the result stays in
// the exact set even for odd dimensions.
inline PiPower zeta_base(Dimension d) {
    std::int64_t two_d = 1;
    for (int i = 0; i < d.value(); ++i) two_d *= 2;
    const PiPower four_pi_pow(Rational(1, two_d), -d.value());
    return four_pi_pow * gamma_exact(d.value() + 2) / gamma_exact(2 * d.value() + 4);
}
}  // namespace detail

// Massless scalar field:
//   zeta_0 = (4 pi)^(-d/2) Gamma(d/2+1) / Gamma(d+2)
//   zeta_1 = (d-2)^2 (d+1) / 2 * zeta_0
inline ExactChannel zeta_scalar_massless_exact(Dimension d) {
    const PiPower base = detail::zeta_base(d);
    const std::int64_t dd = d.value();
    const Rational trace_weight = Rational((dd - 2) * (dd - 2) * (dd + 1), 2);
    return {base, base * trace_weight};
}

// Maxwell field:
//   zeta_0 = base * (2 d^2 - 3 d - 8)
//   zeta_1 = base * (d-4)^2 (d-2) (d+1) / 2
// The traceless coefficient is negative at d = 2 (where conformal curvatures
// vanish); the trace coefficient vanishes at d = 4 by conformal invariance.
inline ExactChannel zeta_maxwell_exact(Dimension d) {
    const PiPower base = detail::zeta_base(d);
    const std::int64_t dd = d.value();
    const Rational c0_weight(2 * dd * dd - 3 * dd - 8);
    const Rational c1_weight = Rational((dd - 4) * (dd - 4) * (dd - 2) * (dd + 1), 2);
    return {base * c0_weight, base * c1_weight};
}

// A neutrino field contributes one fourth of a Maxwell field, with no
// independent spectral shape.
inline ExactChannel zeta_neutrino_exact(Dimension d) {
    const ExactChannel m = zeta_maxwell_exact(d);
    const Rational quarter(1, 4);
    return {m.c0 * quarter, m.c1 * quarter};
}

inline ChannelScalar zeta_scalar_massless(Dimension d) {
    return zeta_scalar_massless_exact(d).value();
}
inline ChannelScalar zeta_maxwell(Dimension d) { return zeta_maxwell_exact(d).value(); }
inline ChannelScalar zeta_neutrino(Dimension d) { return zeta_neutrino_exact(d).value(); }

// Massive scalar field at momentum invariant k2:
//   zeta_r = zeta_r(massless) * theta(k^2 - 4 mu^2)
//            * (1 - 4 mu^2 / k^2)^{(d-3)/2} * (1 - 4 lambda_r mu^2 / k^2)^2
// Below the pair-production threshold the coefficients vanish (that is a
// value, not an error).  The massive formula involves the channel
// eigenvalues, which are singular at d = 2, so massive coefficients require
// d >= 3.
inline ChannelScalar zeta_scalar_massive(Dimension d, double mu, double k2) {
    if (mu < 0.0) throw std::invalid_argument("zeta_scalar_massive: negative mass");
    if (mu == 0.0) {
        // Massless limit; retain the theta(k^2) gate of the threshold factor.
        return k2 > 0.0 ? zeta_scalar_massless(d) : ChannelScalar{0.0, 0.0};
    }
    if (d.value() < 3) {
        throw DimensionError(
            "zeta_scalar_massive: massive coefficients involve the trace-channel "
            "eigenvalue and require d >= 3");
    }
    if (k2 <= 4.0 * mu * mu) return {0.0, 0.0};
    const ChannelScalar massless = zeta_scalar_massless(d);
    const ChannelScalar lam = channel_lambda(d);
    const double ratio = 4.0 * mu * mu / k2;
    const double phase_space = std::pow(1.0 - ratio, 0.5 * (d.value() - 3));
    auto channel = [&](int r) {
        const double vertex = 1.0 - lam[r] * ratio;
        return massless[r] * phase_space * vertex * vertex;
    };
    return {channel(0), channel(1)};
}

// ---------------------------------------------------------------------------
// Field content: a multiset of species determining the aggregate zeta_r.
// ---------------------------------------------------------------------------

enum class SpeciesKind { Scalar, Maxwell, Neutrino };

inline std::string species_name(SpeciesKind k) {
    switch (k) {
        case SpeciesKind::Scalar:
            return "scalar";
        case SpeciesKind::Maxwell:
            return "maxwell";
        case SpeciesKind::Neutrino:
            return "neutrino";
    }
    return "?";
}

struct FieldSpecies {
    SpeciesKind kind = SpeciesKind::Scalar;
    double mass = 0.0;     // natural units; only scalars may be massive
    int multiplicity = 1;  // e.g. the number of neutrino fields

    friend bool operator==(const FieldSpecies&, const FieldSpecies&) = default;
};

struct FieldContent {
    std::vector<FieldSpecies> species;
    Dimension d;
};

inline void validate_content(const FieldContent& content) {
    for (const FieldSpecies& sp : content.species) {
        if (sp.multiplicity < 1) {
            throw std::invalid_argument("field content: multiplicity must be >= 1");
        }
        if (sp.mass < 0.0) {
            throw std::invalid_argument("field content: negative mass");
        }
        if (sp.kind != SpeciesKind::Scalar && sp.mass != 0.0) {
            throw std::invalid_argument("field content: only scalar species may carry mass");
        }
    }
}

inline bool content_massless(const FieldContent& content) {
    for (const FieldSpecies& sp : content.species) {
        if (sp.mass != 0.0) return false;
    }
    return true;
}

// Largest pair-production threshold 4 mu^2 over the content.
inline double content_max_threshold(const FieldContent& content) {
    double thr = 0.0;
    for (const FieldSpecies& sp : content.species) {
        thr = std::max(thr, 4.0 * sp.mass * sp.mass);
    }
    return thr;
}

// Aggregate channel coefficients at momentum invariant k2: the sum over
// species of multiplicity times the species coefficient.  Massless species
// contribute their constant value at any k2 (the lightcone gate lives in the
// spectral prefactor, not in zeta); massive scalars contribute their
// threshold-gated shape.
inline ChannelScalar zeta_content(const FieldContent& content, double k2) {
    if (content.species.empty()) {
        throw std::invalid_argument("zeta_content: empty field content");
    }
    validate_content(content);
    ChannelScalar acc{0.0, 0.0};
    for (const FieldSpecies& sp : content.species) {
        ChannelScalar z{0.0, 0.0};
        switch (sp.kind) {
            case SpeciesKind::Scalar:
                z = (sp.mass == 0.0) ? zeta_scalar_massless(content.d)
                                     : zeta_scalar_massive(content.d, sp.mass, k2);
                break;
            case SpeciesKind::Maxwell:
                z = zeta_maxwell(content.d);
                break;
            case SpeciesKind::Neutrino:
                z = zeta_neutrino(content.d);
                break;
        }
        acc = acc + static_cast<double>(sp.multiplicity) * z;
    }
    return acc;
}

// Exact aggregate over massless content (used for coefficient tables).
inline ExactChannel zeta_content_exact(const FieldContent& content) {
    if (content.species.empty()) {
        throw std::invalid_argument("zeta_content_exact: empty field content");
    }
    validate_content(content);
    if (!content_massless(content)) {
        throw std::invalid_argument(
            "zeta_content_exact: massive coefficients are momentum-dependent and have "
            "no single exact value");
    }
    ExactChannel acc{PiPower(), PiPower()};
    for (const FieldSpecies& sp : content.species) {
        ExactChannel z;
        switch (sp.kind) {
            case SpeciesKind::Scalar:
                z = zeta_scalar_massless_exact(content.d);
                break;
            case SpeciesKind::Maxwell:
                z = zeta_maxwell_exact(content.d);
                break;
            case SpeciesKind::Neutrino:
                z = zeta_neutrino_exact(content.d);
                break;
        }
        const Rational mult(sp.multiplicity);
        acc.c0 = acc.c0 + z.c0 * mult;
        acc.c1 = acc.c1 + z.c1 * mult;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Stress-tensor noise spectrum.
// ---------------------------------------------------------------------------

// The two-dimensional scalar stress spectrum carries an extra lightcone term
// with tensor structure k x k x k x k and coefficient hbar / 12.  Contracting
// a momentum into that structure raises the power of k^2 on the shell, which
// vanishes identically - the term is transverse by construction.
inline SpectralTerm d2_anomaly_term(double hbar) {
    SpectralTerm t;
    t.support = Support::OnShell;
    t.power = Rational(0);
    t.freq = FreqFactor::One;
    t.c0 = {hbar / 12.0, 0.0};
    t.anomaly = true;
    return t;
}

// Symmetrized stress-tensor noise density:
//   sigma_TT = (k^2)^{d/2} hbar pi theta(k^2) sum_r zeta_r pi^r   [+ anomaly at d = 2]
// represented as one interior term with power d/2 and channel coefficients
// hbar pi zeta_r.  Massive species have smooth threshold shapes that are not
// single power-law terms, so this builder accepts massless content only;
// massive coefficients remain available through the pointwise zeta API.
inline SpectralDensity stress_tensor_density(const FieldContent& content,
                                             const PhysicalScales& scales) {
    if (content.species.empty()) {
        throw std::invalid_argument("stress_tensor_density: empty field content");
    }
    if (!content_massless(content)) {
        throw std::invalid_argument(
            "stress_tensor_density: massive species have no power-law term "
            "representation; restrict to massless content");
    }
    const ChannelScalar zeta = zeta_content(content, 1.0);

    SpectralDensity out;
    out.kind = SpectrumKind::Symmetrized;
    out.hbar = scales.hbar;
    out.dim = content.d.value();

    SpectralTerm main;
    main.support = Support::Interior;
    main.threshold = 0.0;
    main.power = Rational(content.d.value(), 2);
    main.freq = FreqFactor::One;
    main.c0 = {scales.hbar * std::numbers::pi * zeta.c0, 0.0};
    main.c1 = {scales.hbar * std::numbers::pi * zeta.c1, 0.0};
    out.terms.push_back(main);

    if (content.d.value() == 2) {
        for (const FieldSpecies& sp : content.species) {
            if (sp.kind == SpeciesKind::Scalar) {
                SpectralTerm a = d2_anomaly_term(scales.hbar);
                a.c0 *= static_cast<double>(sp.multiplicity);
                out.terms.push_back(a);
            }
        }
    }

    return out;
}

}  // namespace gravnoise
