#include "hausdim/volume.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <thread>

namespace hausdim {

namespace {

constexpr long long kBatchSize = 16384;
constexpr std::uint64_t kBallStream = 0x6a11u;
constexpr std::uint64_t kScaleStream = 0x5ca1eu;

long long accepted_in_batch(const MetricSpaceInstance& space, std::span<const double> p, double t,
                            const std::function<bool(std::span<const double>)>& in_ball,
                            long long count, std::uint64_t batch_seed) {
    Rng rng(batch_seed);
    const std::size_t k = static_cast<std::size_t>(space.intrinsic_dim);
    const std::size_t n = static_cast<std::size_t>(space.ambient_dim);
    std::vector<double> u(k), x(n);
    long long accepted = 0;
    for (long long i = 0; i < count; ++i) {
        space.region_draw(p, t, rng, u);
        if (!space.chart_box.contains(u)) continue;
        space.map_chart(u, x);
        if (space.domain_test && !space.domain_test(x)) continue;
        if (in_ball(x)) ++accepted;
    }
    return accepted;
}

} // namespace

long long VolumeProfile::total_samples() const {
    long long s = 0;
    for (const auto& e : estimates) s += e.samples_used;
    return s;
}

bool VolumeProfile::monotone_within(double nsigma) const {
    for (std::size_t j = 0; j + 1 < estimates.size(); ++j) {
        const double slack = nsigma * (estimates[j].std_error + estimates[j + 1].std_error);
        if (estimates[j + 1].value > estimates[j].value + slack) return false;
    }
    return true;
}

void VolumeProfile::write_table(std::ostream& os) const {
    os << "scale\tvalue\tstd_error\n";
    os.precision(17);
    for (std::size_t j = 0; j < scales.size(); ++j)
        os << scales[j] << '\t' << estimates[j].value << '\t' << estimates[j].std_error << '\n';
}

VolumeEstimate estimate_ball_volume(const MetricSpaceInstance& space, const Point& p, double t,
                                    long long budget, std::uint64_t seed, int threads) {
    if (!(t > 0.0)) throw PreconditionError("estimate_ball_volume: t must be positive");
    if (budget < 100) throw PreconditionError("estimate_ball_volume: budget must be >= 100");
    if (static_cast<int>(p.size()) != space.ambient_dim)
        throw PreconditionError("estimate_ball_volume: point has wrong dimension");
    if (!space.in_domain(p))
        throw PreconditionError("estimate_ball_volume: center is outside the domain");

    VolumeEstimate out;
    out.method = VolumeMethod::monte_carlo;
    out.scale_exceeds_diameter = t > space.diameter_hint;
    out.samples_used = budget;

    const double region_vol = space.region_volume(p, t);
    const auto in_ball = space.make_ball_test(p, t);

    const long long num_batches = (budget + kBatchSize - 1) / kBatchSize;
    std::vector<long long> counts(static_cast<std::size_t>(num_batches), 0);
    auto run_range = [&](long long first, long long last) {
        for (long long b = first; b < last; ++b) {
            const long long count = std::min(kBatchSize, budget - b * kBatchSize);
            counts[static_cast<std::size_t>(b)] = accepted_in_batch(
                space, p, t, in_ball, count, derive_seed(seed, kBallStream, static_cast<std::uint64_t>(b)));
        }
    };
    const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(num_batches)));
    if (nthreads <= 1) {
        run_range(0, num_batches);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        const long long per = (num_batches + nthreads - 1) / nthreads;
        for (int w = 0; w < nthreads; ++w) {
            const long long first = w * per;
            const long long last = std::min(num_batches, first + per);
            if (first >= last) break;
            pool.emplace_back(run_range, first, last);
        }
        for (auto& th : pool) th.join();
    }
    // Acceptance counts are integers, so this reduction does not depend on
    // execution order.
    const long long accepted = std::accumulate(counts.begin(), counts.end(), 0ll);
    const double frac = static_cast<double>(accepted) / static_cast<double>(budget);
    out.value = region_vol * frac;
    out.std_error =
        region_vol * std::sqrt(frac * (1.0 - frac) / static_cast<double>(budget));
    return out;
}

BoxBoundsEstimate box_bounds(const MetricSpaceInstance& space, const Point& p, double t,
                             int resolution) {
    if (space.intrinsic_dim < space.ambient_dim)
        throw UnsupportedOperationError(
            "box_bounds: requires a full-dimensional space (k == n); use chart-based "
            "Monte Carlo estimation for lower-dimensional charts");
    if (resolution < 2) throw PreconditionError("box_bounds: resolution must be >= 2");
    if (!(t > 0.0)) throw PreconditionError("box_bounds: t must be positive");
    const int n = space.ambient_dim;
    const std::size_t nu = static_cast<std::size_t>(n);

    std::vector<double> step(nu);
    double diag2 = 0.0;
    for (int i = 0; i < n; ++i) {
        step[static_cast<std::size_t>(i)] = space.chart_box.extent(i) / resolution;
        diag2 += step[static_cast<std::size_t>(i)] * step[static_cast<std::size_t>(i)];
    }
    const double half_diag = 0.5 * std::sqrt(diag2);
    double cell_vol = 1.0;
    for (double h : step) cell_vol *= h;

    const auto in_ball = space.make_ball_test(p, t);
    // A cell meets the ball only if its center lies within t plus the cell's
    // covering radius, so counting those cells keeps outer an upper bound.
    const auto near_ball = space.make_ball_test(p, t + half_diag);

    std::vector<int> idx(nu, 0);
    std::vector<double> u(nu), x(nu);
    BoxBoundsEstimate out;
    out.resolution = resolution;
    long long inner_cells = 0, outer_cells = 0;

    const long long total = [&] {
        long long c = 1;
        for (int i = 0; i < n; ++i) c *= resolution;
        return c;
    }();
    for (long long cell = 0; cell < total; ++cell) {
        // cell center
        for (std::size_t i = 0; i < nu; ++i)
            u[i] = space.chart_box.lo[i] + (idx[i] + 0.5) * step[i];
        space.map_chart(u, x);
        const bool center_in = in_ball(x) && space.in_domain(x);
        const bool center_near = near_ball(x);

        bool all_corners_in = center_in;
        bool any_corner_in = false;
        for (std::uint64_t mask = 0; mask < (1ull << n) && (all_corners_in || !any_corner_in);
             ++mask) {
            for (std::size_t i = 0; i < nu; ++i)
                u[i] = space.chart_box.lo[i] + (idx[i] + ((mask >> i) & 1 ? 1.0 : 0.0)) * step[i];
            space.map_chart(u, x);
            const bool corner_ball = in_ball(x);
            if (corner_ball)
                any_corner_in = true;
            else
                all_corners_in = false;
            if (all_corners_in && !space.in_domain(x)) all_corners_in = false;
        }
        if (all_corners_in) ++inner_cells;
        if (center_near || any_corner_in) ++outer_cells;

        for (std::size_t i = 0; i < nu; ++i) {
            if (++idx[i] < resolution) break;
            idx[i] = 0;
        }
    }
    out.inner_volume = cell_vol * static_cast<double>(inner_cells);
    out.outer_volume = cell_vol * static_cast<double>(outer_cells);
    return out;
}

VolumeProfile volume_profile(const MetricSpaceInstance& space, const Point& p, double t0,
                             int num_scales, double ratio, long long budget_per_scale,
                             std::uint64_t seed, int threads) {
    if (num_scales < 4) throw PreconditionError("volume_profile: need at least 4 scales");
    if (!(ratio > 0.0 && ratio < 1.0)) throw PreconditionError("volume_profile: ratio must be in (0,1)");
    if (t0 <= 0.0) t0 = space.diameter_hint / 8.0;

    VolumeProfile prof;
    prof.center = p;
    prof.scales.resize(static_cast<std::size_t>(num_scales));
    prof.estimates.resize(static_cast<std::size_t>(num_scales));
    double t = t0;
    // One independent estimate per scale. The per-family covering regions
    // keep the acceptance rate roughly scale-free, so a uniform split of the
    // budget meets a uniform relative-error target across the ladder.
    for (int j = 0; j < num_scales; ++j) {
        prof.scales[static_cast<std::size_t>(j)] = t;
        prof.estimates[static_cast<std::size_t>(j)] =
            estimate_ball_volume(space, p, t, budget_per_scale,
                                 derive_seed(seed, kScaleStream, static_cast<std::uint64_t>(j)),
                                 threads);
        t *= ratio;
    }
    return prof;
}

} // namespace hausdim
