#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "gravnoise/dimension.hpp"
#include "gravnoise/errors.hpp"

namespace gravnoise {

// A d-component wavevector in natural units (c = 1).  Components are the
// physical (contravariant) ones: k[0] is the frequency, k[1..d-1] the spatial
// momentum.  The invariant k^2 = k0^2 - |k_spatial|^2 is computed once at
// construction and cached.
class Momentum {
public:
    explicit Momentum(std::vector<double> components)
        : c_(std::move(components)), k2_(0.0) {
        Dimension dim(static_cast<int>(c_.size()));  // validates 2 <= d <= max
        (void)dim;
        k2_ = invariant_from_components();
    }

    Momentum(std::initializer_list<double> components)
        : Momentum(std::vector<double>(components)) {}

    int dim() const { return static_cast<int>(c_.size()); }

    // Physical (contravariant) component k^mu.
    double operator[](int mu) const { return c_[static_cast<std::size_t>(mu)]; }

    // Covariant component k_mu = eta_{mu nu} k^nu.
    double lower(int mu) const { return metric_sign(mu) * c_[static_cast<std::size_t>(mu)]; }

    double k0() const { return c_[0]; }

    // Cached Lorentz invariant k0^2 - sum_i ki^2.
    double k2() const { return k2_; }

    // Recomputed invariant, exposed so callers can assert cache consistency.
    double invariant_from_components() const {
        double s = c_[0] * c_[0];
        for (std::size_t i = 1; i < c_.size(); ++i) s -= c_[i] * c_[i];
        return s;
    }

    Momentum negated() const {
        std::vector<double> n(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) n[i] = -c_[i];
        return Momentum(std::move(n));
    }

    const std::vector<double>& components() const { return c_; }

private:
    std::vector<double> c_;
    double k2_;
};

// Minkowski inner product a . b = a0 b0 - sum_i ai bi of two physical
// component vectors.
inline double minkowski_dot(const Momentum& a, const Momentum& b) {
    double s = a[0] * b[0];
    for (int i = 1; i < a.dim(); ++i) s -= a[i] * b[i];
    return s;
}

}  // namespace gravnoise
