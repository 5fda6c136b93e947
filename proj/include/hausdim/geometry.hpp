#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "hausdim/rng.hpp"

namespace hausdim {

// Ambient or chart coordinates of a point.
using Point = std::vector<double>;

// Axis-aligned box [lo_0,hi_0] x ... x [lo_{d-1},hi_{d-1}]. A zero-dimensional
// box is the single empty tuple and has volume 1 (empty product), which is
// what makes counting-measure semantics of 0-dimensional spaces fall out of
// the generic estimators.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    int dim() const { return static_cast<int>(lo.size()); }

    double volume() const {
        double v = 1.0;
        for (std::size_t i = 0; i < lo.size(); ++i) v *= (hi[i] - lo[i]);
        return v;
    }

    double extent(int axis) const { return hi[axis] - lo[axis]; }

    double max_extent() const {
        double m = 0.0;
        for (std::size_t i = 0; i < lo.size(); ++i) m = std::max(m, hi[i] - lo[i]);
        return m;
    }

    bool contains(std::span<const double> u) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (u[i] < lo[i] || u[i] > hi[i]) return false;
        return true;
    }

    void sample(Rng& rng, std::span<double> out) const {
        for (std::size_t i = 0; i < lo.size(); ++i) out[i] = rng.next_in(lo[i], hi[i]);
    }

    // Intersection, clamping empty overlaps to degenerate (zero-volume) slabs.
    Box clipped_to(const Box& outer) const {
        Box r = *this;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            r.lo[i] = std::max(lo[i], outer.lo[i]);
            r.hi[i] = std::min(hi[i], outer.hi[i]);
            if (r.hi[i] < r.lo[i]) r.hi[i] = r.lo[i];
        }
        return r;
    }

    static Box unit(int d) {
        Box b;
        b.lo.assign(static_cast<std::size_t>(d), 0.0);
        b.hi.assign(static_cast<std::size_t>(d), 1.0);
        return b;
    }

    static Box centered(std::span<const double> center, double halfwidth) {
        Box b;
        b.lo.resize(center.size());
        b.hi.resize(center.size());
        for (std::size_t i = 0; i < center.size(); ++i) {
            b.lo[i] = center[i] - halfwidth;
            b.hi[i] = center[i] + halfwidth;
        }
        return b;
    }
};

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace hausdim
