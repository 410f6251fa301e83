#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "landau1d/errors.hpp"

namespace landau1d {

/// Uniform grid on [-L, L] with an odd number of nodes, so x = 0 is a node.
class Grid1D {
public:
    Grid1D(double half_extent, int points) : half_extent_(half_extent), points_(points) {
        if (!(half_extent > 0.0)) throw InvalidInput("Grid1D: half extent must be positive");
        if (points < 3) throw InvalidInput("Grid1D: need at least 3 points");
        if (points % 2 == 0) throw InvalidInput("Grid1D: point count must be odd");
    }

    double half_extent() const { return half_extent_; }
    int size() const { return points_; }
    double spacing() const { return 2.0 * half_extent_ / (points_ - 1); }
    double node(int i) const { return -half_extent_ + i * spacing(); }
    int center() const { return points_ / 2; }

    std::vector<double> nodes() const {
        std::vector<double> xs(static_cast<std::size_t>(points_));
        for (int i = 0; i < points_; ++i) xs[i] = node(i);
        xs[center()] = 0.0;
        return xs;
    }

    /// Same spacing, larger extent.
    Grid1D widened(double factor) const {
        int const half_points = points_ / 2;
        int const new_half = static_cast<int>(half_points * factor + 0.5);
        return Grid1D(new_half * spacing(), 2 * new_half + 1);
    }

    std::string describe() const {
        return "L=" + std::to_string(half_extent_) + ",n=" + std::to_string(points_);
    }

private:
    double half_extent_;
    int points_;
};

/// Evenly spaced points on [lo, hi] (inclusive); not required to be symmetric.
inline std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw InvalidInput("linspace: count must be positive");
    std::vector<double> xs(static_cast<std::size_t>(count));
    if (count == 1) {
        xs[0] = lo;
        return xs;
    }
    for (int i = 0; i < count; ++i) xs[i] = lo + (hi - lo) * i / (count - 1);
    xs.back() = hi;
    return xs;
}

} // namespace landau1d
