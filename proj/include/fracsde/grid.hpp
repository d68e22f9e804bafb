#ifndef FRACSDE_GRID_HPP
#define FRACSDE_GRID_HPP

#include <cmath>
#include <vector>

#include "fracsde/errors.hpp"

namespace fracsde {

/// Uniform time grid t_i = i T / n, i = 0..n.
struct TimeGrid {
    double T = 1.0;
    int n = 1;

    TimeGrid() = default;
    TimeGrid(double horizon, int steps) : T(horizon), n(steps) {
        if (!(T > 0.0)) throw config_error("TimeGrid: horizon must be positive");
        if (n < 1) throw config_error("TimeGrid: need at least one step");
    }

    double dt() const { return T / n; }
    double point(int i) const { return i * T / n; }
    int size() const { return n + 1; }

    std::vector<double> points() const {
        std::vector<double> p(n + 1);
        for (int i = 0; i <= n; ++i) p[i] = point(i);
        return p;
    }

    // Nearest grid index, ties rounded up.  Throws if t is outside the grid
    // range by more than half a step.
    int snap(double t) const {
        const double h = dt();
        int i = static_cast<int>(std::floor(t / h + 0.5));
        if (i < 0 || i > n || std::abs(t - i * h) > 0.5 * h * (1 + 1e-12))
            throw config_error("TimeGrid: point off grid beyond snapping tolerance");
        return i;
    }

    bool operator==(const TimeGrid& o) const { return T == o.T && n == o.n; }
};

} // namespace fracsde

#endif
