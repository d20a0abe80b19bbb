#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "gravnoise/dimension.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/projector.hpp"
#include "gravnoise/rational.hpp"

namespace gravnoise {

// ---------------------------------------------------------------------------
// Momentum-domain spectra are finite sums of distributional terms.  The
// distributions are first-class tags, never sampled pointwise: "evaluating" a
// density means reading interior coefficients at a given k^2 or feeding the
// shell terms to an integrator.
// ---------------------------------------------------------------------------

enum class Support {
    OnShell,         // carries delta(k^2): the lightcone shell
    Interior,        // carries theta(k^2 - threshold): inside the lightcone
    PrincipalValue,  // carries PV(1/k^2)-type dispersive structure
};

enum class FreqFactor {
    One,           // no frequency factor
    StepPositive,  // theta(k0): positive frequencies only
    Sign,          // sgn(k0): odd under time reversal
};

enum class SpectrumKind {
    Symmetrized,  // sigma: symmetric-order correlation
    Full,         // C: positive-frequency (vacuum expectation) correlation
    Commutator,   // xi: commutator spectrum
    Response,     // chi: complex susceptibility
};

// Which analytic continuation a Response-kind density represents; determines
// the parity of its imaginary (dissipative) part.
enum class ResponseVariant {
    Feynman,   // chi = chibar + i sigma (even dissipative part)
    Retarded,  // chi = chibar + i xi   (odd dissipative part)
    Advanced,  // chi = chibar - i xi
};

struct SpectralTerm {
    Support support = Support::Interior;
    double threshold = 0.0;          // Interior: contributes where k^2 > threshold
    Rational power = Rational(0);    // exponent p of the (k^2)^p factor
    FreqFactor freq = FreqFactor::One;
    std::complex<double> c0{0.0, 0.0};  // traceless-channel coefficient
    std::complex<double> c1{0.0, 0.0};  // trace-channel coefficient
    // The d = 2 stress spectrum carries an extra lightcone term whose tensor
    // structure is k x k x k x k instead of a channel form; such terms exist
    // only at d = 2 and store their coefficient in c0.
    bool anomaly = false;

    std::complex<double> channel(int r) const {
        if (r == 0) return c0;
        if (r == 1) return c1;
        throw std::invalid_argument("SpectralTerm: channel index must be 0 or 1");
    }

    std::complex<double>& channel_ref(int r) {
        if (r == 0) return c0;
        if (r == 1) return c1;
        throw std::invalid_argument("SpectralTerm: channel index must be 0 or 1");
    }
};

struct SpectralDensity {
    SpectrumKind kind = SpectrumKind::Symmetrized;
    std::vector<SpectralTerm> terms;
    double hbar = 1.0;
    int dim = 4;
    // Meaningful only when kind == Response.
    ResponseVariant variant = ResponseVariant::Feynman;
};

// Physical scale bundle in natural units (c = 1).  kappa is the Einstein
// coupling 8*pi*G and lP2 the squared Planck length hbar*G; the identity
// lP2 = hbar * kappa / (8 pi) holds by construction.
struct PhysicalScales {
    double hbar = 1.0;
    double G_newton = 1.0;

    double kappa() const { return 8.0 * std::numbers::pi * G_newton; }
    double lP2() const { return hbar * G_newton; }

    static PhysicalScales natural() { return {1.0, 1.0}; }
    static PhysicalScales from_planck_area(double lp2, double hbar_in = 1.0) {
        if (lp2 <= 0.0 || hbar_in <= 0.0) {
            throw std::invalid_argument("PhysicalScales: scales must be positive");
        }
        return {hbar_in, lp2 / hbar_in};
    }
};

// Scalar spectral weight sigma(k^2) = hbar * pi * (k^2)^{(d-4)/2} theta(k^2):
// the universal prefactor of the vacuum stress-tensor noise channels,
// evaluated pointwise inside the lightcone.
inline double sigma_scalar(double k2, Dimension d, double hbar) {
    if (k2 <= 0.0) return 0.0;
    return hbar * std::numbers::pi * std::pow(k2, 0.5 * (d.value() - 4));
}

inline double freq_factor_value(FreqFactor f, double k0) {
    switch (f) {
        case FreqFactor::One:
            return 1.0;
        case FreqFactor::StepPositive:
            return k0 > 0.0 ? 1.0 : 0.0;
        case FreqFactor::Sign:
            return k0 > 0.0 ? 1.0 : (k0 < 0.0 ? -1.0 : 0.0);
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Kind conversions: the vacuum fluctuation-dissipation relations.
// ---------------------------------------------------------------------------

// C[k] = 2 hbar theta(k0) sigma[k]: multiply every coefficient by 2 hbar and
// restrict to positive frequencies.
inline SpectralDensity to_full(const SpectralDensity& s) {
    if (s.kind != SpectrumKind::Symmetrized) {
        throw KindError("to_full: input must be a symmetrized density");
    }
    SpectralDensity out = s;
    out.kind = SpectrumKind::Full;
    for (SpectralTerm& t : out.terms) {
        t.c0 *= 2.0 * s.hbar;
        t.c1 *= 2.0 * s.hbar;
        t.freq = FreqFactor::StepPositive;
    }
    return out;
}

// Inverse of to_full: average over +-k0 (theta(k0) + theta(-k0) = 1 almost
// everywhere) and divide by 2 hbar.
inline SpectralDensity to_symmetrized(const SpectralDensity& c) {
    if (c.kind != SpectrumKind::Full) {
        throw KindError("to_symmetrized: input must be a full-kind density");
    }
    SpectralDensity out = c;
    out.kind = SpectrumKind::Symmetrized;
    for (SpectralTerm& t : out.terms) {
        t.c0 /= 2.0 * c.hbar;
        t.c1 /= 2.0 * c.hbar;
        t.freq = FreqFactor::One;
    }
    return out;
}

// xi[k] = sgn(k0) sigma[k].
inline SpectralDensity to_commutator(const SpectralDensity& s) {
    if (s.kind != SpectrumKind::Symmetrized) {
        throw KindError("to_commutator: input must be a symmetrized density");
    }
    SpectralDensity out = s;
    out.kind = SpectrumKind::Commutator;
    for (SpectralTerm& t : out.terms) t.freq = FreqFactor::Sign;
    return out;
}

// ---------------------------------------------------------------------------
// Term-list algebra.
// ---------------------------------------------------------------------------

inline SpectralDensity scaled(const SpectralDensity& s, std::complex<double> factor) {
    SpectralDensity out = s;
    for (SpectralTerm& t : out.terms) {
        t.c0 *= factor;
        t.c1 *= factor;
    }
    return out;
}

// Concatenate the term lists of two densities of the same kind.  All kind
// conversions are linear, so they commute with this operation.
inline SpectralDensity add(const SpectralDensity& a, const SpectralDensity& b) {
    if (a.kind != b.kind || a.hbar != b.hbar || a.dim != b.dim) {
        throw KindError("add: densities must share kind, hbar and dimension");
    }
    SpectralDensity out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

// Multiply a density by (k^2)^shift.
inline SpectralDensity with_power_shift(const SpectralDensity& s, const Rational& shift) {
    SpectralDensity out = s;
    for (SpectralTerm& t : out.terms) t.power = t.power + shift;
    return out;
}

namespace detail {
inline bool same_slot(const SpectralTerm& a, const SpectralTerm& b) {
    return a.support == b.support && a.threshold == b.threshold && a.power == b.power &&
           a.freq == b.freq && a.anomaly == b.anomaly;
}
}  // namespace detail

// Canonical form of a density:
//   - lightcone terms with a positive power of k^2 vanish identically
//     (delta(k^2) (k^2)^p = 0 for p >= 1) and are dropped;
//   - like terms are merged; zero terms removed.
// This rule is what makes distributional identities (transversality of the
// anomaly term, vanishing Einstein-tensor fluctuations, ...) checkable
// structurally instead of numerically.
inline SpectralDensity simplified(const SpectralDensity& s) {
    SpectralDensity out = s;
    out.terms.clear();
    for (const SpectralTerm& t : s.terms) {
        if (t.support == Support::OnShell && t.power >= Rational(1)) continue;
        bool merged = false;
        for (SpectralTerm& u : out.terms) {
            if (detail::same_slot(u, t)) {
                u.c0 += t.c0;
                u.c1 += t.c1;
                merged = true;
                break;
            }
        }
        if (!merged) out.terms.push_back(t);
    }
    auto is_zero = [](const SpectralTerm& t) {
        return std::abs(t.c0) == 0.0 && std::abs(t.c1) == 0.0;
    };
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(), is_zero),
                    out.terms.end());
    return out;
}

// Structural invariants used by the validation suite.
inline bool all_positive_frequency(const SpectralDensity& s) {
    for (const SpectralTerm& t : s.terms) {
        if (t.freq != FreqFactor::StepPositive) return false;
    }
    return true;
}

inline bool non_spacelike_support(const SpectralDensity& s) {
    for (const SpectralTerm& t : s.terms) {
        if (t.support == Support::PrincipalValue) return false;
        if (t.threshold < 0.0) return false;
    }
    return true;
}

// Consistency of the stored tags; throws on violation.
inline void validate_density(const SpectralDensity& s) {
    for (const SpectralTerm& t : s.terms) {
        if (t.threshold < 0.0) {
            throw KindError("validate_density: negative interior threshold");
        }
        if (t.anomaly && s.dim != 2) {
            throw KindError("validate_density: anomaly term outside d = 2");
        }
        if (s.kind == SpectrumKind::Full && t.freq != FreqFactor::StepPositive) {
            throw KindError("validate_density: full-kind term without positive-frequency factor");
        }
        if (s.kind != SpectrumKind::Response &&
            (t.c0.imag() != 0.0 || t.c1.imag() != 0.0)) {
            throw KindError("validate_density: complex coefficient on a non-response density");
        }
    }
}

// ---------------------------------------------------------------------------
// Response decomposition.
// ---------------------------------------------------------------------------

struct ResponseParts {
    SpectralDensity dispersive;   // real part: Response kind, PV/smooth terms
    SpectralDensity dissipative;  // imaginary part: Symmetrized (Feynman
                                  // variant) or Commutator (retarded/advanced)
};

// Split a susceptibility into dispersive and dissipative parts, term by term:
// the real part of each coefficient stays in the dispersive density, the
// imaginary part becomes the dissipative spectrum.  For a Feynman-variant
// response the dissipative part is the symmetrized spectrum; for retarded or
// advanced it is the commutator spectrum (odd, carrying sgn(k0); the advanced
// imaginary part enters with a minus sign).
inline ResponseParts response_parts(const SpectralDensity& chi) {
    if (chi.kind != SpectrumKind::Response) {
        throw KindError("response_parts: input must be a response density");
    }
    ResponseParts out;
    out.dispersive = chi;
    out.dispersive.terms.clear();
    out.dissipative = chi;
    out.dissipative.terms.clear();
    const bool feynman = chi.variant == ResponseVariant::Feynman;
    const double orientation = (chi.variant == ResponseVariant::Advanced) ? -1.0 : 1.0;
    out.dissipative.kind = feynman ? SpectrumKind::Symmetrized : SpectrumKind::Commutator;
    out.dissipative.variant = ResponseVariant::Feynman;  // tag no longer meaningful

    for (const SpectralTerm& t : chi.terms) {
        if (t.c0.real() != 0.0 || t.c1.real() != 0.0) {
            SpectralTerm re = t;
            re.c0 = {t.c0.real(), 0.0};
            re.c1 = {t.c1.real(), 0.0};
            out.dispersive.terms.push_back(re);
        }
        if (t.c0.imag() != 0.0 || t.c1.imag() != 0.0) {
            SpectralTerm im = t;
            im.c0 = {orientation * t.c0.imag(), 0.0};
            im.c1 = {orientation * t.c1.imag(), 0.0};
            im.freq = feynman ? t.freq : FreqFactor::Sign;
            out.dissipative.terms.push_back(im);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pointwise evaluation.
// ---------------------------------------------------------------------------

// Smooth (interior) part of one channel at a given momentum; lightcone and
// principal-value terms do not contribute pointwise.
inline double interior_value(const SpectralDensity& s, int r, double k0, double k2) {
    double acc = 0.0;
    for (const SpectralTerm& t : s.terms) {
        if (t.support != Support::Interior) continue;
        if (k2 <= t.threshold) continue;
        acc += t.channel(r).real() * std::pow(k2, t.power.value()) *
               freq_factor_value(t.freq, k0);
    }
    return acc;
}

// Evaluate a density with the distributions replaced by their
// epsilon-regularized forms:
//   delta(k^2)  ->  (epsilon/pi) / (k^4 + epsilon^2)
//   PV(1/k^2)   ->  k^2 / (k^4 + epsilon^2)       (applied for power -1)
// This is the pointwise oracle used to compare analytic continuations, e.g.
// the advanced response at k equals the retarded response at -k.
inline std::complex<double> evaluate_regularized(const SpectralDensity& s, int r,
                                                 double k0, double k2, double epsilon) {
    std::complex<double> acc{0.0, 0.0};
    const double reg = k2 * k2 + epsilon * epsilon;
    for (const SpectralTerm& t : s.terms) {
        double shape = 0.0;
        switch (t.support) {
            case Support::OnShell:
                shape = (epsilon / std::numbers::pi) / reg *
                        std::pow(std::abs(k2), t.power.value());
                break;
            case Support::Interior:
                shape = (k2 > t.threshold) ? std::pow(k2, t.power.value()) : 0.0;
                break;
            case Support::PrincipalValue:
                if (t.power == Rational(-1)) {
                    shape = k2 / reg;
                } else {
                    shape = std::pow(k2, t.power.value());
                }
                break;
        }
        acc += t.channel(r) * shape * freq_factor_value(t.freq, k0);
    }
    return acc;
}

}  // namespace gravnoise
