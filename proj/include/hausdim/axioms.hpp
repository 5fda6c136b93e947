#pragma once

#include <cstdint>
#include <string>

#include "hausdim/metric_space.hpp"

namespace hausdim {

// Outcome of a randomized metric-axiom check. When ok is false, (a, b, c)
// witnesses the violated axiom with the offending values in lhs/rhs.
struct MetricAxiomCheck {
    bool ok = true;
    std::string violated; // "identity" | "symmetry" | "triangle" | "positivity"
    Point a, b, c;
    double lhs = 0.0;
    double rhs = 0.0;
};

// Samples `trials` random triples and verifies d(p,p)=0, symmetry, the
// triangle inequality (within tol) and positivity of d on distinct points.
MetricAxiomCheck check_metric_axioms(const MetricSpaceInstance& space, int trials,
                                     std::uint64_t seed, double tol = 1e-12);

} // namespace hausdim
