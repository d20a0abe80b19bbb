#pragma once

#include <string>

#include "gravnoise/dimension.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/momentum.hpp"
#include "gravnoise/rational.hpp"
#include "gravnoise/tensor.hpp"

namespace gravnoise {

// A pair of per-channel real values.  Transverse symmetric rank-2 tensors
// decompose into two orthogonal channels: r = 0 (traceless) and r = 1
// (trace); scalar coefficients come in such pairs throughout.
struct ChannelScalar {
    double c0 = 0.0;  // traceless channel (r = 0)
    double c1 = 0.0;  // trace channel (r = 1)

    double operator[](int r) const {
        if (r == 0) return c0;
        if (r == 1) return c1;
        throw std::invalid_argument("ChannelScalar: channel index must be 0 or 1");
    }

    friend ChannelScalar operator+(const ChannelScalar& a, const ChannelScalar& b) {
        return {a.c0 + b.c0, a.c1 + b.c1};
    }
    friend ChannelScalar operator*(double s, const ChannelScalar& a) {
        return {s * a.c0, s * a.c1};
    }
    friend ChannelScalar operator*(const ChannelScalar& a, double s) { return s * a; }
};

// Channel eigenvalues of the linearized gravitational response:
// lambda_0 = 1, lambda_1 = -1/(d-2).  The trace channel is singular at d = 2,
// which is why everything beyond bare matter coefficients requires d >= 3.
inline ChannelScalar channel_lambda(Dimension d) {
    if (d.value() == 2) {
        throw SingularChannelError(
            "channel_lambda: the trace-channel eigenvalue -1/(d-2) is singular at d = 2");
    }
    return {1.0, -1.0 / (d.value() - 2)};
}

// Exact scalar weights of the two rank-4 channel forms:
//   pi^r_{mnrs} = alpha_r pi_{mn} pi_{rs} + beta_r (pi_{mr} pi_{ns} + pi_{ms} pi_{nr})
// with (alpha_1, beta_1) = (1/(d-1), 0) and (alpha_0, beta_0) = (-1/(d-1), 1/2).
inline Rational channel_alpha(int r, Dimension d) {
    if (r == 1) return Rational(1, d.value() - 1);
    if (r == 0) return Rational(-1, d.value() - 1);
    throw std::invalid_argument("channel_alpha: channel index must be 0 or 1");
}

inline Rational channel_beta(int r, Dimension d) {
    (void)d;
    if (r == 1) return Rational(0);
    if (r == 0) return Rational(1, 2);
    throw std::invalid_argument("channel_beta: channel index must be 0 or 1");
}

// Transverse projector pi_{mn} = eta_{mn} - k_m k_n / k^2.  Undefined on the
// lightcone; k^2 = 0 is rejected, never regularized.
inline Tensor2 transverse_projector(const Momentum& k) {
    if (k.k2() == 0.0) {
        throw NullMomentumError(
            "transverse_projector: undefined for lightlike momentum (k^2 = 0)");
    }
    const int d = k.dim();
    Tensor2 pi = minkowski(Dimension(d));
    const double inv_k2 = 1.0 / k.k2();
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            pi(m, n) -= k.lower(m) * k.lower(n) * inv_k2;
        }
    }
    return pi;
}

// Rank-4 channel form pi^r built from the transverse projector.  The two
// forms are orthogonal idempotents: (pi^r . pi^s) = delta_rs pi^r, the trace
// of pi^1 over a pair is pi, and pi^0 is pair-traceless.
inline Tensor4 channel_form(int r, const Momentum& k) {
    if (r != 0 && r != 1) {
        throw std::invalid_argument("channel_form: channel index must be 0 or 1");
    }
    const int d = k.dim();
    const Tensor2 pi = transverse_projector(k);
    const double alpha = channel_alpha(r, Dimension(d)).value();
    const double beta = channel_beta(r, Dimension(d)).value();
    Tensor4 out((Dimension(d)));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            for (int rho = 0; rho < d; ++rho) {
                for (int s = 0; s < d; ++s) {
                    out(m, n, rho, s) = alpha * pi(m, n) * pi(rho, s) +
                                        beta * (pi(m, rho) * pi(n, s) +
                                                pi(m, s) * pi(n, rho));
                }
            }
        }
    }
    out.declare_symmetry(Tensor4Symmetry::PairSymmetric);
    return out;
}

}  // namespace gravnoise
