#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "hausdim/errors.hpp"
#include "hausdim/geometry.hpp"

namespace hausdim {

// Chart map from intrinsic (chart-box) coordinates to ambient coordinates.
using ChartFn = std::function<void(std::span<const double> u, std::span<double> x)>;

// Metric on ambient points.
using MetricFn = std::function<double(std::span<const double> a, std::span<const double> b)>;

// Membership test on ambient points.
using DomainFn = std::function<bool(std::span<const double> x)>;

// Factory producing a fast membership test for the closed ball B(center, t).
// Optional; when absent the estimators fall back to evaluating the metric.
using BallTestFactory =
    std::function<std::function<bool(std::span<const double> x)>(std::span<const double> center, double t)>;

// A chart-space sampling region guaranteed to cover the chart preimage of a
// metric ball. draw() emits points uniform w.r.t. Lebesgue measure on the
// region and volume() is its Lebesgue measure; together they let the ball
// volume estimator spend its sample budget near the ball instead of across
// the whole chart box. Correctness does not depend on tightness: any covering
// region yields an unbiased estimate, only the variance changes.
struct BallRegion {
    std::function<double(std::span<const double> center, double t)> volume;
    std::function<void(std::span<const double> center, double t, Rng& rng, std::span<double> out)> draw;

    bool available() const { return static_cast<bool>(volume) && static_cast<bool>(draw); }
};

// A sampleable metric space (X, d) presented through a chart over a box.
//
// The reference measure used throughout is the pushforward of Lebesgue
// measure on the chart box; its density w.r.t. intrinsic-dimensional
// Lebesgue measure on X is bounded above and below for C^1 charts, which
// is all the scaling-exponent machinery needs.
struct MetricSpaceInstance {
    std::string name;
    int ambient_dim = 0;   // n
    int intrinsic_dim = 0; // k <= n
    Box chart_box;         // k-dimensional parameter box
    ChartFn chart;         // empty => identity (requires k == n)
    DomainFn domain_test;  // empty => accept all chart images
    MetricFn metric;
    double diameter_hint = 1.0;
    std::optional<double> oracle_dimension; // may be +infinity
    BallRegion ball_region;                 // empty => whole chart box
    BallTestFactory ball_test;              // empty => metric comparison
    Box ambient_box_hint;                   // bounding box of the chart image

    void map_chart(std::span<const double> u, std::span<double> x) const {
        if (chart) {
            chart(u, x);
        } else {
            for (std::size_t i = 0; i < u.size(); ++i) x[i] = u[i];
        }
    }

    bool in_domain(std::span<const double> x) const {
        return domain_test ? domain_test(x) : true;
    }

    double distance(std::span<const double> a, std::span<const double> b) const {
        return metric(a, b);
    }

    Point chart_point(std::span<const double> u) const {
        Point x(static_cast<std::size_t>(ambient_dim));
        map_chart(u, x);
        return x;
    }

    void sample_chart(Rng& rng, std::span<double> u) const { chart_box.sample(rng, u); }

    // The reference sampler: uniform on the chart box, mapped through the chart.
    Point sample_point(Rng& rng) const {
        Point u(static_cast<std::size_t>(intrinsic_dim));
        sample_chart(rng, u);
        return chart_point(u);
    }

    // Chart-space region used when estimating the volume of B(center, t).
    double region_volume(std::span<const double> center, double t) const {
        return ball_region.available() ? ball_region.volume(center, t) : chart_box.volume();
    }

    void region_draw(std::span<const double> center, double t, Rng& rng, std::span<double> out) const {
        if (ball_region.available()) {
            ball_region.draw(center, t, rng, out);
        } else {
            chart_box.sample(rng, out);
        }
    }

    std::function<bool(std::span<const double>)> make_ball_test(std::span<const double> center,
                                                                double t) const {
        if (ball_test) return ball_test(center, t);
        Point c(center.begin(), center.end());
        const MetricFn& d = metric;
        return [c = std::move(c), d, t](std::span<const double> x) { return d(c, x) <= t; };
    }
};

// A parametric family alpha -> (X_alpha, d_alpha).
struct FamilySpec {
    std::string name;
    int parameter_dim = 0;
    std::function<MetricSpaceInstance(std::span<const double> alpha)> instantiate;
};

} // namespace hausdim
