#pragma once

#include <string>

#include "gravnoise/errors.hpp"

namespace gravnoise {

// Spacetime dimension.  The whole library works in arbitrary integer d >= 2
// with signature (+, -, -, ...); rank-4 tensors are stored densely, so an
// upper bound keeps allocations honest.
class Dimension {
public:
    static constexpr int max_value = 8;

    explicit Dimension(int d) : d_(d) {
        if (d < 2) {
            throw DimensionError("spacetime dimension must be at least 2, got " +
                                 std::to_string(d));
        }
        if (d > max_value) {
            throw DimensionError("spacetime dimension capped at " +
                                 std::to_string(max_value) + " (dense rank-4 storage), got " +
                                 std::to_string(d));
        }
    }

    int value() const { return d_; }
    operator int() const { return d_; }

    friend bool operator==(const Dimension& a, const Dimension& b) {
        return a.d_ == b.d_;
    }
    friend bool operator!=(const Dimension& a, const Dimension& b) {
        return !(a == b);
    }

private:
    int d_;
};

// Metric sign of a diagonal entry: +1 for the time axis, -1 for space.
inline double metric_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

}  // namespace gravnoise
