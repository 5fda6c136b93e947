#include "hausdim/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hausdim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Spot-check injectivity of a chart on random sample pairs.
void require_injective_on_samples(const MetricSpaceInstance& s, std::uint64_t seed,
                                  const std::string& what) {
    if (s.intrinsic_dim == 0) return;
    Rng rng(derive_seed(seed, 0x1a9ecu));
    Point u(s.intrinsic_dim), v(s.intrinsic_dim);
    Point x(s.ambient_dim), y(s.ambient_dim);
    for (int trial = 0; trial < 256; ++trial) {
        s.chart_box.sample(rng, u);
        s.chart_box.sample(rng, v);
        if (euclidean_distance(u, v) <= 1e-6) continue;
        s.map_chart(u, x);
        s.map_chart(v, y);
        if (euclidean_distance(x, y) < 1e-9)
            throw PreconditionError(what + ": chart is not injective on samples");
    }
}

// Bounding box of the chart image, estimated from corners plus random samples.
Box estimate_ambient_box(const MetricSpaceInstance& s, std::uint64_t seed) {
    const std::size_t n = static_cast<std::size_t>(s.ambient_dim);
    Box out;
    out.lo.assign(n, kInf);
    out.hi.assign(n, -kInf);
    Point u(s.intrinsic_dim), x(n);
    auto absorb = [&]() {
        s.map_chart(u, x);
        for (std::size_t i = 0; i < n; ++i) {
            out.lo[i] = std::min(out.lo[i], x[i]);
            out.hi[i] = std::max(out.hi[i], x[i]);
        }
    };
    const int k = s.intrinsic_dim;
    if (k == 0) {
        absorb();
        return out;
    }
    if (k <= 16) {
        for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
            for (int i = 0; i < k; ++i)
                u[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? s.chart_box.hi[i] : s.chart_box.lo[i];
            absorb();
        }
    }
    Rng rng(derive_seed(seed, 0xb0bu));
    for (int trial = 0; trial < 256; ++trial) {
        s.chart_box.sample(rng, u);
        absorb();
    }
    return out;
}

bool chart_extends_coordinates(const MetricSpaceInstance& s) {
    // True for identity and graph charts: the first k ambient coordinates of
    // chart(u) equal u exactly. Enables exact chart-space ball bounds under
    // the euclidean ambient metric.
    if (s.intrinsic_dim == 0) return false;
    Rng rng(0x5eedu);
    Point u(s.intrinsic_dim), x(s.ambient_dim);
    for (int trial = 0; trial < 32; ++trial) {
        s.chart_box.sample(rng, u);
        s.map_chart(u, x);
        for (int i = 0; i < s.intrinsic_dim; ++i)
            if (x[static_cast<std::size_t>(i)] != u[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

MetricFn euclidean_metric() {
    return [](std::span<const double> a, std::span<const double> b) {
        return euclidean_distance(a, b);
    };
}

BallTestFactory euclidean_ball_test() {
    return [](std::span<const double> center, double t) {
        Point c(center.begin(), center.end());
        const double t2 = t * t;
        return [c = std::move(c), t2](std::span<const double> x) {
            double s = 0.0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                const double d = x[i] - c[i];
                s += d * d;
            }
            return s <= t2;
        };
    };
}

} // namespace

MetricSpaceInstance snowflake(double r) {
    if (!(r > 0.0) || r > 1.0)
        throw PreconditionError("snowflake: r must lie in (0,1]; |x-y|^r is not a metric for r > 1");
    MetricSpaceInstance s;
    s.name = "snowflake(r=" + std::to_string(r) + ")";
    s.ambient_dim = 1;
    s.intrinsic_dim = 1;
    s.chart_box = Box::unit(1);
    s.ambient_box_hint = s.chart_box;
    s.domain_test = [](std::span<const double> x) { return x[0] >= 0.0 && x[0] <= 1.0; };
    s.metric = [r](std::span<const double> a, std::span<const double> b) {
        return std::pow(std::fabs(a[0] - b[0]), r);
    };
    s.diameter_hint = 1.0;
    s.oracle_dimension = 1.0 / r;
    const double inv_r = 1.0 / r;
    Box domain = s.chart_box;
    s.ball_region.volume = [inv_r, domain](std::span<const double> c, double t) {
        const double h = std::pow(t, inv_r); // euclidean halfwidth of the d-ball
        return Box::centered(c, h).clipped_to(domain).volume();
    };
    s.ball_region.draw = [inv_r, domain](std::span<const double> c, double t, Rng& rng,
                                         std::span<double> out) {
        const double h = std::pow(t, inv_r);
        Box::centered(c, h).clipped_to(domain).sample(rng, out);
    };
    s.ball_test = [inv_r](std::span<const double> center, double t) {
        const double c0 = center[0];
        const double h = std::pow(t, inv_r);
        return [c0, h](std::span<const double> x) { return std::fabs(x[0] - c0) <= h; };
    };
    return s;
}

Point heisenberg_mul(std::span<const double> g, std::span<const double> h) {
    return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
}

Point heisenberg_inverse(std::span<const double> g) {
    return {-g[0], -g[1], g[0] * g[1] - g[2]};
}

MetricSpaceInstance heisenberg() {
    MetricSpaceInstance s;
    s.name = "heisenberg";
    s.ambient_dim = 3;
    s.intrinsic_dim = 3;
    s.chart_box.lo = {-1.0, -1.0, -1.0};
    s.chart_box.hi = {1.0, 1.0, 1.0};
    s.ambient_box_hint = s.chart_box;
    Box domain = s.chart_box;
    s.domain_test = [domain](std::span<const double> x) { return domain.contains(x); };
    s.metric = [](std::span<const double> a, std::span<const double> b) {
        const double dx = b[0] - a[0];
        const double dy = b[1] - a[1];
        const double dz = b[2] - a[2] - a[0] * dy;
        const double q = dx * dx * dx * dx + dy * dy * dy * dy + dz * dz;
        return std::sqrt(std::sqrt(q));
    };
    s.diameter_hint = 3.0;
    s.oracle_dimension = 4.0;
    // Chart preimage of B(p,t): |dx|<=t, |dy|<=t, z - z_p in x_p*dy +- t^2.
    // The shear is measure preserving, so drawing (dx, dy, w) uniform in the
    // product box and applying it keeps the draw uniform on the region.
    s.ball_region.volume = [](std::span<const double>, double t) {
        return 8.0 * t * t * t * t * t * t; // (2t)^2 * (2t^2)
    };
    s.ball_region.draw = [](std::span<const double> c, double t, Rng& rng, std::span<double> out) {
        const double dx = rng.next_in(-t, t);
        const double dy = rng.next_in(-t, t);
        const double w = rng.next_in(-t * t, t * t);
        out[0] = c[0] + dx;
        out[1] = c[1] + dy;
        out[2] = c[2] + c[0] * dy + w;
    };
    s.ball_test = [](std::span<const double> center, double t) {
        const double cx = center[0], cy = center[1], cz = center[2];
        const double t4 = t * t * t * t;
        return [cx, cy, cz, t4](std::span<const double> x) {
            const double dx = x[0] - cx;
            const double dy = x[1] - cy;
            const double dz = x[2] - cz - cx * dy;
            return dx * dx * dx * dx + dy * dy * dy * dy + dz * dz <= t4;
        };
    };
    return s;
}

MetricSpaceInstance euclidean_subset(ChartFn chart, const Box& chart_box, int k, int n,
                                     const std::string& name) {
    if (k < 0 || n < k) throw PreconditionError("euclidean_subset: need 0 <= k <= n");
    if (chart_box.dim() != k) throw PreconditionError("euclidean_subset: chart box must be k-dimensional");
    MetricSpaceInstance s;
    s.name = name;
    s.ambient_dim = n;
    s.intrinsic_dim = k;
    s.chart_box = chart_box;
    s.chart = std::move(chart);
    s.metric = euclidean_metric();
    s.ball_test = euclidean_ball_test();
    s.oracle_dimension = static_cast<double>(k);
    require_injective_on_samples(s, 0xeu, "euclidean_subset");
    s.ambient_box_hint = estimate_ambient_box(s, 0xeu);
    double diam = 0.0;
    for (int i = 0; i < n; ++i) diam += std::pow(s.ambient_box_hint.extent(i), 2);
    s.diameter_hint = std::max(std::sqrt(diam), 1e-9);
    if (chart_extends_coordinates(s)) {
        // |u - u0| <= |chart(u) - chart(u0)| coordinatewise, so the euclidean
        // ball preimage sits inside the chart-space box of halfwidth t.
        Box domain = s.chart_box;
        s.ball_region.volume = [domain](std::span<const double> c, double t) {
            return Box::centered(c.first(domain.lo.size()), t).clipped_to(domain).volume();
        };
        s.ball_region.draw = [domain](std::span<const double> c, double t, Rng& rng,
                                      std::span<double> out) {
            Box::centered(c.first(domain.lo.size()), t).clipped_to(domain).sample(rng, out);
        };
    }
    return s;
}

MetricSpaceInstance euclidean_box(const Box& box, const std::string& name) {
    return euclidean_subset(ChartFn{}, box, box.dim(), box.dim(), name);
}

MetricSpaceInstance unit_interval() { return euclidean_box(Box::unit(1), "unit-interval"); }

MetricSpaceInstance unit_square() { return euclidean_box(Box::unit(2), "unit-square"); }

MetricSpaceInstance parabola_graph() {
    ChartFn chart = [](std::span<const double> u, std::span<double> x) {
        x[0] = u[0];
        x[1] = u[0] * u[0];
    };
    return euclidean_subset(std::move(chart), Box::unit(1), 1, 2, "parabola-graph");
}

MetricSpaceInstance single_point(const Point& coords) {
    MetricSpaceInstance s;
    s.name = "point";
    s.ambient_dim = static_cast<int>(coords.size());
    s.intrinsic_dim = 0;
    s.chart_box = Box{};
    Point c = coords;
    s.chart = [c](std::span<const double>, std::span<double> x) {
        for (std::size_t i = 0; i < c.size(); ++i) x[i] = c[i];
    };
    s.metric = euclidean_metric();
    s.ball_test = euclidean_ball_test();
    s.diameter_hint = 1.0;
    s.oracle_dimension = 0.0;
    s.ambient_box_hint.lo = coords;
    s.ambient_box_hint.hi = coords;
    return s;
}

MetricSpaceInstance discrete_example() {
    MetricSpaceInstance s;
    s.name = "discrete";
    s.ambient_dim = 1;
    s.intrinsic_dim = 1;
    s.chart_box = Box::unit(1);
    s.ambient_box_hint = s.chart_box;
    s.domain_test = [](std::span<const double> x) { return x[0] >= 0.0 && x[0] <= 1.0; };
    s.metric = [](std::span<const double> a, std::span<const double> b) {
        return a[0] == b[0] ? 0.0 : 1.0;
    };
    s.diameter_hint = 1.0;
    s.oracle_dimension = kInf;
    Box domain = s.chart_box;
    s.ball_region.volume = [domain](std::span<const double>, double t) {
        return t < 1.0 ? 0.0 : domain.volume();
    };
    s.ball_region.draw = [domain](std::span<const double> c, double t, Rng& rng,
                                  std::span<double> out) {
        if (t < 1.0) {
            out[0] = c[0]; // the ball is the single center point
        } else {
            domain.sample(rng, out);
        }
    };
    return s;
}

MetricSpaceInstance snowflake_edge(double r) {
    MetricSpaceInstance s = snowflake(r);
    s.name = "snowflake-edge(r=" + std::to_string(r) + ")";
    s.ambient_dim = 2;
    s.chart = [](std::span<const double> u, std::span<double> x) {
        x[0] = u[0];
        x[1] = 0.0;
    };
    s.domain_test = [](std::span<const double> x) {
        return x[0] >= 0.0 && x[0] <= 1.0 && x[1] == 0.0;
    };
    s.metric = [r](std::span<const double> a, std::span<const double> b) {
        return std::pow(std::fabs(a[0] - b[0]), r);
    };
    s.ambient_box_hint.lo = {0.0, 0.0};
    s.ambient_box_hint.hi = {1.0, 0.0};
    return s;
}

MetricSpaceInstance pullback_metric(const MetricSpaceInstance& base, ChartFn h, ChartFn h_inv,
                                    const std::string& name) {
    if (!h || !h_inv) throw PreconditionError("pullback_metric: need both the map and its inverse");
    MetricSpaceInstance s;
    s.name = name.empty() ? "pullback(" + base.name + ")" : name;
    s.ambient_dim = base.ambient_dim;
    s.intrinsic_dim = base.intrinsic_dim;
    s.chart_box = base.chart_box;
    s.diameter_hint = base.diameter_hint;
    s.oracle_dimension = base.oracle_dimension;

    const std::size_t n = static_cast<std::size_t>(base.ambient_dim);
    ChartFn base_chart = base.chart;
    s.chart = [h, base_chart, n](std::span<const double> u, std::span<double> x) {
        static thread_local std::vector<double> mid;
        mid.resize(n);
        if (base_chart) {
            base_chart(u, mid);
        } else {
            for (std::size_t i = 0; i < u.size(); ++i) mid[i] = u[i];
        }
        h(mid, x);
    };

    MetricFn base_metric = base.metric;
    s.metric = [h_inv, base_metric, n](std::span<const double> a, std::span<const double> b) {
        static thread_local std::vector<double> pa, pb;
        pa.resize(n);
        pb.resize(n);
        h_inv(a, pa);
        h_inv(b, pb);
        return base_metric(pa, pb);
    };

    if (base.ball_region.available()) {
        auto region = base.ball_region;
        s.ball_region.volume = [region, h_inv, n](std::span<const double> c, double t) {
            static thread_local std::vector<double> pc;
            pc.resize(n);
            h_inv(c, pc);
            return region.volume(pc, t);
        };
        s.ball_region.draw = [region, h_inv, n](std::span<const double> c, double t, Rng& rng,
                                                std::span<double> out) {
            static thread_local std::vector<double> pc;
            pc.resize(n);
            h_inv(c, pc);
            region.draw(pc, t, rng, out);
        };
    }
    if (base.ball_test) {
        auto base_test = base.ball_test;
        s.ball_test = [base_test, h_inv, n](std::span<const double> center, double t) {
            std::vector<double> pc(n);
            h_inv(center, pc);
            auto inner = base_test(pc, t);
            return [inner, h_inv, n](std::span<const double> x) {
                static thread_local std::vector<double> px;
                px.resize(n);
                h_inv(x, px);
                return inner(px);
            };
        };
    }

    // Round-trip and injectivity spot checks.
    {
        Rng rng(0xfadeu);
        Point u(s.intrinsic_dim), x(n), back(n), fwd(n);
        for (int trial = 0; trial < 128; ++trial) {
            if (s.intrinsic_dim > 0) s.chart_box.sample(rng, u);
            s.map_chart(u, x);
            h_inv(x, back);
            h(back, fwd);
            if (euclidean_distance(fwd, x) > 1e-6 * (1.0 + euclidean_distance(x, Point(n, 0.0))))
                throw PreconditionError("pullback_metric: inverse map does not invert on samples");
        }
    }
    require_injective_on_samples(s, 0xfadeu, "pullback_metric");
    s.ambient_box_hint = estimate_ambient_box(s, 0xfadeu);
    return s;
}

std::pair<ChartFn, ChartFn> make_quadratic_distortion(const Box& box, double L, std::uint64_t seed) {
    if (!(L >= 1.0)) throw PreconditionError("make_quadratic_distortion: need L >= 1");
    const int n = box.dim();
    Rng rng(derive_seed(seed, 0xd15707u));
    std::vector<double> lo(box.lo), width(static_cast<std::size_t>(n)), s0(static_cast<std::size_t>(n)),
        s1(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        width[static_cast<std::size_t>(i)] = std::max(box.extent(i), 1e-12);
        s0[static_cast<std::size_t>(i)] = rng.next_in(1.0 / L, L);
        s1[static_cast<std::size_t>(i)] = rng.next_in(1.0 / L, L);
    }
    // h_i(x) = lo + s0*q + (s1-s0)/(2w) * q^2 with q = x - lo; h' runs
    // linearly from s0 to s1 across the box, staying inside [1/L, L].
    ChartFn h = [lo, width, s0, s1](std::span<const double> x, std::span<double> y) {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            const double q = x[i] - lo[i];
            y[i] = lo[i] + s0[i] * q + 0.5 * (s1[i] - s0[i]) / width[i] * q * q;
        }
    };
    ChartFn h_inv = [lo, width, s0, s1](std::span<const double> y, std::span<double> x) {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            const double c = y[i] - lo[i];
            const double a = 0.5 * (s1[i] - s0[i]) / width[i];
            const double b = s0[i];
            // Solve a q^2 + b q = c, stable as a -> 0.
            const double disc = std::sqrt(std::max(b * b + 4.0 * a * c, 0.0));
            x[i] = lo[i] + 2.0 * c / (b + disc);
        }
    };
    return {std::move(h), std::move(h_inv)};
}

MetricSpaceInstance make_builtin_space(const std::string& family,
                                       const std::map<std::string, double>& params) {
    auto get = [&](const std::string& key, double fallback, bool required = false) {
        auto it = params.find(key);
        if (it != params.end()) return it->second;
        if (required) throw PreconditionError("family '" + family + "' requires parameter '" + key + "'");
        return fallback;
    };
    if (family == "snowflake") return snowflake(get("r", 0.5, true));
    if (family == "heisenberg") return heisenberg();
    if (family == "interval" || family == "unit-interval") return unit_interval();
    if (family == "square" || family == "unit-square") return unit_square();
    if (family == "parabola" || family == "parabola-graph") return parabola_graph();
    if (family == "discrete") return discrete_example();
    if (family == "point") {
        Point c;
        for (int i = 0;; ++i) {
            auto it = params.find("x" + std::to_string(i));
            if (it == params.end()) break;
            c.push_back(it->second);
        }
        if (c.empty()) c = {0.0};
        return single_point(c);
    }
    if (family == "snowflake-edge") return snowflake_edge(get("r", 0.5, true));
    throw UnknownFamilyError("unknown family '" + family + "'");
}

std::vector<std::string> builtin_family_param_names(const std::string& family) {
    if (family == "snowflake" || family == "snowflake-edge") return {"r"};
    if (family == "constant-square") return {"alpha"};
    if (family == "discrete-or-snowflake") return {"alpha"};
    return {};
}

FamilySpec make_builtin_family(const std::string& family) {
    FamilySpec f;
    f.name = family;
    if (family == "snowflake") {
        f.parameter_dim = 1;
        f.instantiate = [](std::span<const double> alpha) { return snowflake(alpha[0]); };
        return f;
    }
    if (family == "constant-square") {
        f.parameter_dim = 1;
        f.instantiate = [](std::span<const double>) { return unit_square(); };
        return f;
    }
    if (family == "discrete-or-snowflake") {
        f.parameter_dim = 1;
        f.instantiate = [](std::span<const double> alpha) {
            return alpha[0] < 0.0 ? discrete_example() : snowflake(0.5);
        };
        return f;
    }
    throw UnknownFamilyError("unknown family '" + family + "'");
}

} // namespace hausdim
