#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "gravnoise/dimension.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/momentum.hpp"

namespace gravnoise {

enum class Variance { Covariant, Contravariant };

// Dense rank-2 Lorentz tensor.  Builders produce all-covariant tensors; index
// raising/lowering is exact because the metric is diagonal +-1.
class Tensor2 {
public:
    explicit Tensor2(Dimension d,
                     Variance v0 = Variance::Covariant,
                     Variance v1 = Variance::Covariant)
        : d_(d.value()), var_{v0, v1},
          e_(static_cast<std::size_t>(d.value()) * d.value(), 0.0) {}

    int dim() const { return d_; }

    double operator()(int mu, int nu) const {
        return e_[static_cast<std::size_t>(mu) * d_ + nu];
    }
    double& operator()(int mu, int nu) {
        return e_[static_cast<std::size_t>(mu) * d_ + nu];
    }

    Variance variance(int slot) const { return var_[static_cast<std::size_t>(slot)]; }
    void set_variance(int slot, Variance v) { var_[static_cast<std::size_t>(slot)] = v; }

    bool is_symmetric(double tol = 0.0) const {
        for (int mu = 0; mu < d_; ++mu) {
            for (int nu = mu + 1; nu < d_; ++nu) {
                if (std::abs((*this)(mu, nu) - (*this)(nu, mu)) > tol) return false;
            }
        }
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : e_) m = std::max(m, std::abs(v));
        return m;
    }

    Tensor2& operator+=(const Tensor2& o) {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Tensor2& operator-=(const Tensor2& o) {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    Tensor2& operator*=(double s) {
        for (double& v : e_) v *= s;
        return *this;
    }

    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(Tensor2 a, double s) { return a *= s; }
    friend Tensor2 operator*(double s, Tensor2 a) { return a *= s; }

private:
    int d_;
    std::array<Variance, 2> var_;
    std::vector<double> e_;
};

// Covariant Minkowski metric diag(1, -1, ..., -1).
inline Tensor2 minkowski(Dimension d) {
    Tensor2 eta(d);
    for (int mu = 0; mu < d.value(); ++mu) eta(mu, mu) = metric_sign(mu);
    return eta;
}

// Flip one index's variance by contracting with the (diagonal) metric.
inline Tensor2 raise_index(const Tensor2& t, int slot) {
    if (t.variance(slot) != Variance::Covariant) {
        throw std::invalid_argument("raise_index: slot is already contravariant");
    }
    Tensor2 r = t;
    r.set_variance(slot, Variance::Contravariant);
    for (int mu = 0; mu < t.dim(); ++mu) {
        for (int nu = 0; nu < t.dim(); ++nu) {
            const double sign = metric_sign(slot == 0 ? mu : nu);
            r(mu, nu) = sign * t(mu, nu);
        }
    }
    return r;
}

inline Tensor2 lower_index(const Tensor2& t, int slot) {
    if (t.variance(slot) != Variance::Contravariant) {
        throw std::invalid_argument("lower_index: slot is already covariant");
    }
    Tensor2 r = t;
    r.set_variance(slot, Variance::Covariant);
    for (int mu = 0; mu < t.dim(); ++mu) {
        for (int nu = 0; nu < t.dim(); ++nu) {
            const double sign = metric_sign(slot == 0 ? mu : nu);
            r(mu, nu) = sign * t(mu, nu);
        }
    }
    return r;
}

namespace detail {
inline void require_covariant(const Tensor2& t, const char* where) {
    if (t.variance(0) != Variance::Covariant || t.variance(1) != Variance::Covariant) {
        throw std::invalid_argument(std::string(where) +
                                    ": expected an all-covariant tensor");
    }
}
}  // namespace detail

// Metric trace eta^{mu nu} T_{mu nu} of an all-covariant tensor.
inline double trace(const Tensor2& t) {
    detail::require_covariant(t, "trace");
    double s = 0.0;
    for (int mu = 0; mu < t.dim(); ++mu) s += metric_sign(mu) * t(mu, mu);
    return s;
}

// Full contraction A^{mu nu} B_{mu nu} of two all-covariant tensors.
inline double dot(const Tensor2& a, const Tensor2& b) {
    detail::require_covariant(a, "dot");
    detail::require_covariant(b, "dot");
    double s = 0.0;
    for (int mu = 0; mu < a.dim(); ++mu) {
        for (int nu = 0; nu < a.dim(); ++nu) {
            s += metric_sign(mu) * metric_sign(nu) * a(mu, nu) * b(mu, nu);
        }
    }
    return s;
}

// Covariant vector (k . T)_nu = k^mu T_{mu nu}.
inline std::vector<double> contract_vector(const Momentum& k, const Tensor2& t) {
    detail::require_covariant(t, "contract_vector");
    std::vector<double> out(static_cast<std::size_t>(t.dim()), 0.0);
    for (int nu = 0; nu < t.dim(); ++nu) {
        double s = 0.0;
        for (int mu = 0; mu < t.dim(); ++mu) s += k[mu] * t(mu, nu);
        out[static_cast<std::size_t>(nu)] = s;
    }
    return out;
}

enum class Tensor4Symmetry {
    // Symmetric within each index pair and under pair exchange:
    // A(mnrs) = A(nmrs) = A(mnsr) = A(rsmn).
    PairSymmetric,
    // Antisymmetric within each pair, symmetric under pair exchange:
    // A(mnrs) = -A(nmrs) = -A(mnsr) = A(rsmn).
    RiemannType,
};

// Dense rank-4 all-covariant Lorentz tensor (d^4 entries, d <= 8).  Builders
// record the symmetry class they guarantee; checkers verify it entrywise.
class Tensor4 {
public:
    explicit Tensor4(Dimension d)
        : d_(d.value()),
          e_(static_cast<std::size_t>(d.value()) * d.value() * d.value() * d.value(), 0.0) {}

    int dim() const { return d_; }

    double operator()(int a, int b, int c, int e) const {
        return e_[index(a, b, c, e)];
    }
    double& operator()(int a, int b, int c, int e) {
        return e_[index(a, b, c, e)];
    }

    std::optional<Tensor4Symmetry> declared_symmetry() const { return sym_; }
    void declare_symmetry(Tensor4Symmetry s) { sym_ = s; }

    double max_abs() const {
        double m = 0.0;
        for (double v : e_) m = std::max(m, std::abs(v));
        return m;
    }

    Tensor4& operator+=(const Tensor4& o) {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Tensor4& operator-=(const Tensor4& o) {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    Tensor4& operator*=(double s) {
        for (double& v : e_) v *= s;
        return *this;
    }

    friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
    friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
    friend Tensor4 operator*(Tensor4 a, double s) { return a *= s; }
    friend Tensor4 operator*(double s, Tensor4 a) { return a *= s; }

private:
    std::size_t index(int a, int b, int c, int e) const {
        return ((static_cast<std::size_t>(a) * d_ + b) * d_ + c) * d_ + e;
    }

    int d_;
    std::optional<Tensor4Symmetry> sym_;
    std::vector<double> e_;
};

// Largest entrywise violation of a symmetry class; zero for an exactly
// symmetric tensor.
inline double symmetry_violation(const Tensor4& t, Tensor4Symmetry sym) {
    const double sign = (sym == Tensor4Symmetry::PairSymmetric) ? 1.0 : -1.0;
    double worst = 0.0;
    const int d = t.dim();
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            for (int c = 0; c < d; ++c) {
                for (int e = 0; e < d; ++e) {
                    const double v = t(a, b, c, e);
                    worst = std::max(worst, std::abs(v - sign * t(b, a, c, e)));
                    worst = std::max(worst, std::abs(v - sign * t(a, b, e, c)));
                    worst = std::max(worst, std::abs(v - t(c, e, a, b)));
                }
            }
        }
    }
    return worst;
}

// Pair contraction (A . B)_{mnrs} = A_{mn}^{ab} B_{abrs}.
inline Tensor4 pair_product(const Tensor4& A, const Tensor4& B) {
    const int d = A.dim();
    Tensor4 out((Dimension(d)));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            for (int r = 0; r < d; ++r) {
                for (int s = 0; s < d; ++s) {
                    double acc = 0.0;
                    for (int a = 0; a < d; ++a) {
                        const double sa = metric_sign(a);
                        for (int b = 0; b < d; ++b) {
                            acc += sa * metric_sign(b) * A(m, n, a, b) * B(a, b, r, s);
                        }
                    }
                    out(m, n, r, s) = acc;
                }
            }
        }
    }
    return out;
}

// (A . h)_{mn} = A_{mn}^{rs} h_{rs}.
inline Tensor2 pair_apply(const Tensor4& A, const Tensor2& h) {
    detail::require_covariant(h, "pair_apply");
    const int d = A.dim();
    Tensor2 out((Dimension(d)));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            double acc = 0.0;
            for (int r = 0; r < d; ++r) {
                const double sr = metric_sign(r);
                for (int s = 0; s < d; ++s) {
                    acc += sr * metric_sign(s) * A(m, n, r, s) * h(r, s);
                }
            }
            out(m, n) = acc;
        }
    }
    return out;
}

// eta^{mn} A_{mnrs}: trace over the first index pair.
inline Tensor2 pair_trace(const Tensor4& A) {
    const int d = A.dim();
    Tensor2 out((Dimension(d)));
    for (int r = 0; r < d; ++r) {
        for (int s = 0; s < d; ++s) {
            double acc = 0.0;
            for (int m = 0; m < d; ++m) acc += metric_sign(m) * A(m, m, r, s);
            out(r, s) = acc;
        }
    }
    return out;
}

// Full contraction A^{mnrs} B_{mnrs}.
inline double full_contract(const Tensor4& A, const Tensor4& B) {
    const int d = A.dim();
    double acc = 0.0;
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            for (int r = 0; r < d; ++r) {
                for (int s = 0; s < d; ++s) {
                    acc += metric_sign(m) * metric_sign(n) * metric_sign(r) *
                           metric_sign(s) * A(m, n, r, s) * B(m, n, r, s);
                }
            }
        }
    }
    return acc;
}

}  // namespace gravnoise
