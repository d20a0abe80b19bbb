#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gravnoise/errors.hpp"

namespace gravnoise {

// sinc(x) = sin(x)/x with the removable singularity handled by the Taylor
// series below |x| < 1e-4 (the quartic term is then < 1e-17, below double
// resolution).
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

namespace detail {

struct QuadNode {
    double x;  // abscissa in [-1, 1]
    double w;  // weight
};

// 64-point Gauss-Legendre nodes/weights, generated once by Newton iteration
// on the Legendre recurrence (standard gauleg construction, converges to
// machine precision).
inline const std::array<QuadNode, 64>& gl64_nodes() {
    static const std::array<QuadNode, 64> table = [] {
        std::array<QuadNode, 64> t{};
        constexpr int n = 64;
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 64; ++iter) {
                double pjm1 = 1.0;
                double pj = x;
                for (int j = 2; j <= n; ++j) {
                    const double pjp1 = ((2.0 * j - 1.0) * x * pj - (j - 1.0) * pjm1) / j;
                    pjm1 = pj;
                    pj = pjp1;
                }
                dp = n * (x * pj - pjm1) / (x * x - 1.0);
                const double dx = -pj / dp;
                x += dx;
                if (std::abs(dx) < 1e-15) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            t[static_cast<std::size_t>(i)] = {-x, w};
            t[static_cast<std::size_t>(n - 1 - i)] = {x, w};
        }
        return t;
    }();
    return table;
}

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (positive half; the
// rule is symmetric).  Even-indexed Kronrod nodes coincide with the embedded
// 7-point Gauss rule.
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double value = 0.0;
    double error = 0.0;
};

// One Gauss-Kronrod 7/15 panel on [a, b]; the error estimate is the usual
// scaled |K15 - G7| heuristic.
inline PanelResult gk15_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = kronrod_w[7] * f(c);
    double gauss = gauss_w[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kronrod_x[static_cast<std::size_t>(i)];
        const double fs = f(c - dx) + f(c + dx);
        kron += kronrod_w[static_cast<std::size_t>(i)] * fs;
        if (i % 2 == 1) {
            gauss += gauss_w[static_cast<std::size_t>(i / 2)] * fs;
        }
    }
    PanelResult r;
    r.value = kron * h;
    const double diff = std::abs(kron - gauss) * std::abs(h);
    r.error = diff;
    if (diff > 0.0) {
        // QUADPACK-style sharpening of the raw difference.
        const double scale = std::pow(200.0 * diff / (std::abs(r.value) + 1e-300), 1.5);
        if (scale < 1.0) r.error = diff * scale;
    }
    return r;
}

}  // namespace detail

// Fixed 64-node Gauss-Legendre quadrature on [a, b]; exact (to rounding) for
// polynomial integrands up to degree 127.
inline double gauss_legendre_64(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0.0;
    for (const auto& node : detail::gl64_nodes()) {
        acc += node.w * f(c + h * node.x);
    }
    return acc * h;
}

struct QuadratureOptions {
    double rel_tol = 1e-6;
    double abs_tol = 0.0;     // absolute floor for integrals near zero
    int max_segments = 4000;  // subdivision budget before giving up
};

// Globally adaptive Gauss-Kronrod 7/15 integration: repeatedly bisect the
// segment with the largest error estimate until the summed error meets the
// tolerance.  Throws QuadratureError with diagnostics when the budget runs
// out.
inline double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                 const QuadratureOptions& opt = {}) {
    if (a == b) return 0.0;

    struct Segment {
        double a, b, value, error;
    };
    std::vector<Segment> segs;
    auto push = [&](double lo, double hi) {
        const detail::PanelResult p = detail::gk15_panel(f, lo, hi);
        segs.push_back({lo, hi, p.value, p.error});
    };
    push(a, b);

    for (;;) {
        double total = 0.0;
        double err = 0.0;
        for (const Segment& s : segs) {
            total += s.value;
            err += s.error;
        }
        const double goal = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (err <= goal || err == 0.0) return total;
        if (static_cast<int>(segs.size()) >= opt.max_segments) {
            throw QuadratureError(
                "adaptive_integrate: tolerance " + std::to_string(opt.rel_tol) +
                " not reached after " + std::to_string(segs.size()) +
                " segments (estimated error " + std::to_string(err) +
                ", integral " + std::to_string(total) + ")");
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i) {
            if (segs[i].error > segs[worst].error) worst = i;
        }
        const Segment s = segs[worst];
        segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(worst));
        const double mid = 0.5 * (s.a + s.b);
        if (mid == s.a || mid == s.b) {
            // Interval at rounding resolution; accept its current estimate.
            segs.push_back(s);
            double v = 0.0;
            for (const Segment& q : segs) v += q.value;
            return v;
        }
        push(s.a, mid);
        push(mid, s.b);
    }
}

}  // namespace gravnoise
