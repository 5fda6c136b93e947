#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hausdim/metric_space.hpp"

namespace hausdim {

enum class VolumeMethod { monte_carlo, grid };

// Estimate of the reference volume of one metric ball.
struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long long samples_used = 0;
    VolumeMethod method = VolumeMethod::monte_carlo;
    bool scale_exceeds_diameter = false;
};

// Ball volumes along a strictly decreasing scale ladder t_0 > t_1 > ... .
struct VolumeProfile {
    Point center;
    std::vector<double> scales;
    std::vector<VolumeEstimate> estimates;

    std::size_t size() const { return scales.size(); }
    long long total_samples() const;

    // Shrinking balls: value(j+1) <= value(j) up to nsigma combined errors.
    bool monotone_within(double nsigma) const;

    // Tab-separated (scale, value, std_error) rows for plotting.
    void write_table(std::ostream& os) const;
};

// Deterministic grid bracket of the ball volume for full-dimensional spaces.
struct BoxBoundsEstimate {
    double inner_volume = 0.0;
    double outer_volume = 0.0;
    int resolution = 0;
};

// Monte Carlo estimate of the reference volume of {q in X : d(p,q) <= t}.
// Deterministic given the seed: samples are drawn in fixed-size batches with
// seeds derived per batch, and acceptance counts reduce by integer addition,
// so the result is bit-identical for any thread count.
VolumeEstimate estimate_ball_volume(const MetricSpaceInstance& space, const Point& p, double t,
                                    long long budget, std::uint64_t seed, int threads = 1);

// Grid cells inside / meeting the ball, in chart coordinates. Requires a
// full-dimensional space (k == n).
BoxBoundsEstimate box_bounds(const MetricSpaceInstance& space, const Point& p, double t,
                             int resolution);

// Ball volumes across the ladder t_j = t0 * ratio^j, one independent
// estimate per scale. Pass t0 <= 0 to start at diameter_hint / 8.
VolumeProfile volume_profile(const MetricSpaceInstance& space, const Point& p, double t0,
                             int num_scales, double ratio, long long budget_per_scale,
                             std::uint64_t seed, int threads = 1);

} // namespace hausdim
