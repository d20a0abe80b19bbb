#pragma once

#include <optional>
#include <vector>

#include "gravnoise/dimension.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/momentum.hpp"
#include "gravnoise/projector.hpp"
#include "gravnoise/tensor.hpp"

namespace gravnoise {

// Momentum-domain linearized curvature algebra.  All formulas are bilinear in
// (k, h); the tensors are real because every curvature carries an even number
// of momentum factors, so the phase convention of the perturbation drops out.

// Pure-gauge metric perturbation generated by a covariant vector xi:
// h_{rs} = k_r xi_s + k_s xi_r.  Every linearized curvature of this tensor
// vanishes identically, which is the library's gauge-invariance probe.
inline Tensor2 gauge_perturbation(const Momentum& k, const std::vector<double>& xi_lower) {
    const int d = k.dim();
    if (static_cast<int>(xi_lower.size()) != d) {
        throw std::invalid_argument("gauge_perturbation: generator size must match dimension");
    }
    Tensor2 h((Dimension(d)));
    for (int r = 0; r < d; ++r) {
        for (int s = 0; s < d; ++s) {
            h(r, s) = k.lower(r) * xi_lower[s] + k.lower(s) * xi_lower[r];
        }
    }
    return h;
}

// Riemann curvature of a conformal perturbation (h proportional to the
// metric), used as the universal tensor structure of curvature correlations:
//   CR_{mnrs} = (k_m k_r eta_{ns} + k_n k_s eta_{mr}
//                - k_n k_r eta_{ms} - k_m k_s eta_{nr}) / 2.
inline Tensor4 conformal_riemann(const Momentum& k) {
    const int d = k.dim();
    const Tensor2 eta = minkowski(Dimension(d));
    Tensor4 out((Dimension(d)));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            for (int r = 0; r < d; ++r) {
                for (int s = 0; s < d; ++s) {
                    out(m, n, r, s) = 0.5 * (k.lower(m) * k.lower(r) * eta(n, s) +
                                             k.lower(n) * k.lower(s) * eta(m, r) -
                                             k.lower(n) * k.lower(r) * eta(m, s) -
                                             k.lower(m) * k.lower(s) * eta(n, r));
                }
            }
        }
    }
    out.declare_symmetry(Tensor4Symmetry::RiemannType);
    return out;
}

struct CurvatureSet {
    Tensor4 riemann;           // R_{mnrs}; contracting slots 1 and 3 gives Ricci
    Tensor2 ricci;             // R_{ns} = eta^{mr} R_{mnrs}
    double scalar = 0.0;       // R = eta^{ns} R_{ns}
    Tensor2 einstein;          // G_{ns} = R_{ns} - eta_{ns} R / 2
    std::optional<Tensor4> weyl;  // trace-free part, defined for d >= 4
};

// All linearized curvatures of a symmetric metric perturbation h at momentum
// k.  The Weyl tensor is computed only on request since it needs d >= 4.
inline CurvatureSet linearized_curvatures(const Tensor2& h, const Momentum& k,
                                          bool with_weyl = false) {
    const int d = k.dim();
    if (h.dim() != d) {
        throw std::invalid_argument("linearized_curvatures: h and k dimensions differ");
    }
    const double sym_tol = 1e-12 * (1.0 + h.max_abs());
    if (!h.is_symmetric(sym_tol)) {
        throw std::invalid_argument("linearized_curvatures: h must be symmetric");
    }
    if (with_weyl && d < 4) {
        throw DimensionError("linearized_curvatures: Weyl curvature requires d >= 4");
    }

    const Tensor2 eta = minkowski(Dimension(d));

    // R_{mnrs} = (k_m k_r h_{ns} + k_n k_s h_{mr} - k_n k_r h_{ms} - k_m k_s h_{nr}) / 2
    Tensor4 riemann((Dimension(d)));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            for (int r = 0; r < d; ++r) {
                for (int s = 0; s < d; ++s) {
                    riemann(m, n, r, s) = 0.5 * (k.lower(m) * k.lower(r) * h(n, s) +
                                                 k.lower(n) * k.lower(s) * h(m, r) -
                                                 k.lower(n) * k.lower(r) * h(m, s) -
                                                 k.lower(m) * k.lower(s) * h(n, r));
                }
            }
        }
    }
    riemann.declare_symmetry(Tensor4Symmetry::RiemannType);

    // Ricci via the closed form (equals the slot-1/3 metric contraction):
    // R_{ns} = (k^2 h_{ns} + k_n k_s h - k_n (k.h)_s - k_s (k.h)_n) / 2.
    const double htr = trace(h);
    const std::vector<double> kh = contract_vector(k, h);  // (k.h)_s covariant
    Tensor2 ricci((Dimension(d)));
    for (int n = 0; n < d; ++n) {
        for (int s = 0; s < d; ++s) {
            ricci(n, s) = 0.5 * (k.k2() * h(n, s) + k.lower(n) * k.lower(s) * htr -
                                 k.lower(n) * kh[static_cast<std::size_t>(s)] -
                                 k.lower(s) * kh[static_cast<std::size_t>(n)]);
        }
    }

    // Scalar curvature R = k^2 h - k^n k^s h_{ns}.
    double khk = 0.0;
    for (int n = 0; n < d; ++n) khk += k[n] * kh[static_cast<std::size_t>(n)];
    const double scalar = k.k2() * htr - khk;

    Tensor2 einstein = ricci;
    for (int n = 0; n < d; ++n) {
        for (int s = 0; s < d; ++s) {
            einstein(n, s) -= 0.5 * eta(n, s) * scalar;
        }
    }

    CurvatureSet out{std::move(riemann), std::move(ricci), scalar, std::move(einstein),
                     std::nullopt};

    if (with_weyl) {
        // W_{mnrs} = R_{mnrs}
        //   + (eta_{ms} Ric_{rn} + eta_{nr} Ric_{sm}
        //      - eta_{mr} Ric_{sn} - eta_{ns} Ric_{rm}) / (d-2)
        //   + R (eta_{mr} eta_{sn} - eta_{ms} eta_{rn}) / ((d-1)(d-2))
        Tensor4 weyl((Dimension(d)));
        const double c1 = 1.0 / (d - 2);
        const double c2 = scalar / (static_cast<double>(d - 1) * (d - 2));
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                for (int r = 0; r < d; ++r) {
                    for (int s = 0; s < d; ++s) {
                        weyl(m, n, r, s) =
                            out.riemann(m, n, r, s) +
                            c1 * (eta(m, s) * out.ricci(r, n) + eta(n, r) * out.ricci(s, m) -
                                  eta(m, r) * out.ricci(s, n) - eta(n, s) * out.ricci(r, m)) +
                            c2 * (eta(m, r) * eta(s, n) - eta(m, s) * eta(r, n));
                    }
                }
            }
        }
        weyl.declare_symmetry(Tensor4Symmetry::RiemannType);
        out.weyl = std::move(weyl);
    }

    return out;
}

// Channel projection of a transverse symmetric tensor: G^r = (pi^r . G).
// For the Einstein tensor of any symmetric h this obeys
// G^r = (k^2 / (2 lambda_r)) (pi^r . h), the identity behind the dual-path
// consistency checks.
inline Tensor2 channel_project(int r, const Tensor2& t, const Momentum& k) {
    return pair_apply(channel_form(r, k), t);
}

}  // namespace gravnoise
