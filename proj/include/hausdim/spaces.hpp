#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hausdim/metric_space.hpp"

namespace hausdim {

// --- Built-in example spaces -------------------------------------------

// [0,1] with d(x,y) = |x - y|^r, 0 < r <= 1. Raises the dimension to 1/r.
MetricSpaceInstance snowflake(double r);

// Heisenberg group restricted to the box [-1,1]^3 with the left-invariant
// homogeneous metric d((x,y,z),(x',y',z')) =
// ((x'-x)^4 + (y'-y)^4 + (z'-z-x(y'-y))^2)^(1/4). Dimension 4.
MetricSpaceInstance heisenberg();

// Chart image in R^n with the euclidean metric. The chart must be injective
// and C^1 on its box; injectivity is spot-checked on random sample pairs.
MetricSpaceInstance euclidean_subset(ChartFn chart, const Box& chart_box, int k, int n,
                                     const std::string& name = "euclidean-subset");

// [0,1] with the 0/1 metric. Not separable; dimension infinity.
MetricSpaceInstance discrete_example();

// Isometric copy of `base` over h(X), where h is injective with inverse
// h_inv: d'(h(x), h(y)) = d(x, y).
MetricSpaceInstance pullback_metric(const MetricSpaceInstance& base, ChartFn h, ChartFn h_inv,
                                    const std::string& name = "");

// Convenience builders.
MetricSpaceInstance euclidean_box(const Box& box, const std::string& name = "euclidean-box");
MetricSpaceInstance unit_interval();
MetricSpaceInstance unit_square();
MetricSpaceInstance parabola_graph(); // graph of t -> (t, t^2) on [0,1]
MetricSpaceInstance single_point(const Point& coords);

// Edge of the unit square carrying a snowflake metric in its first ambient
// coordinate; a lower-dimensional stratum that can dominate the dimension.
MetricSpaceInstance snowflake_edge(double r);

// --- Heisenberg group algebra (exposed for invariance tests) ------------

// (a,b,c) * (d,e,f) = (a+d, b+e, c+f+a*e)
Point heisenberg_mul(std::span<const double> g, std::span<const double> h);
Point heisenberg_inverse(std::span<const double> g);

// --- Distortion charts ---------------------------------------------------

// Per-axis monotone quadratic reparameterization of `box` with derivative in
// [1/L, L]; returns (h, h_inv) with a closed-form inverse. Used to build
// bilipschitz distortions that inherit the metric axioms via pullback.
std::pair<ChartFn, ChartFn> make_quadratic_distortion(const Box& box, double L, std::uint64_t seed);

// --- Name-based registry (CLI / sweep specs) -----------------------------

// Instantiates a built-in space from a family name and named parameters.
// Throws PreconditionError for bad parameters and UnknownFamilyError for
// unrecognized names.
class UnknownFamilyError : public std::invalid_argument {
public:
    explicit UnknownFamilyError(const std::string& what) : std::invalid_argument(what) {}
};

MetricSpaceInstance make_builtin_space(const std::string& family,
                                       const std::map<std::string, double>& params);

// Parameter names, in grid order, for a built-in parametric family.
std::vector<std::string> builtin_family_param_names(const std::string& family);

// Built-in parametric families for sweeps.
FamilySpec make_builtin_family(const std::string& family);

} // namespace hausdim
