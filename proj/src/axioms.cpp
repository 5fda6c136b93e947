#include "hausdim/axioms.hpp"

#include <cmath>

namespace hausdim {

MetricAxiomCheck check_metric_axioms(const MetricSpaceInstance& space, int trials,
                                     std::uint64_t seed, double tol) {
    if (trials < 1) throw PreconditionError("check_metric_axioms: trials must be >= 1");
    Rng rng(derive_seed(seed, 0xa10u));
    MetricAxiomCheck out;
    auto fail = [&](const char* which, const Point& a, const Point& b, const Point& c, double lhs,
                    double rhs) {
        out.ok = false;
        out.violated = which;
        out.a = a;
        out.b = b;
        out.c = c;
        out.lhs = lhs;
        out.rhs = rhs;
    };
    for (int i = 0; i < trials; ++i) {
        const Point a = space.sample_point(rng);
        const Point b = space.sample_point(rng);
        const Point c = space.sample_point(rng);
        const double daa = space.distance(a, a);
        if (std::fabs(daa) > tol) {
            fail("identity", a, b, c, daa, 0.0);
            return out;
        }
        const double dab = space.distance(a, b);
        const double dba = space.distance(b, a);
        if (std::fabs(dab - dba) > tol) {
            fail("symmetry", a, b, c, dab, dba);
            return out;
        }
        const double dac = space.distance(a, c);
        const double dcb = space.distance(c, b);
        if (dab > dac + dcb + tol) {
            fail("triangle", a, b, c, dab, dac + dcb);
            return out;
        }
        if (a != b && dab <= 0.0) {
            bool distinct = false;
            for (std::size_t j = 0; j < a.size(); ++j)
                if (a[j] != b[j]) distinct = true;
            if (distinct) {
                fail("positivity", a, b, c, dab, 0.0);
                return out;
            }
        }
    }
    return out;
}

} // namespace hausdim
