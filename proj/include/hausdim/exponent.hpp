#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "hausdim/volume.hpp"

namespace hausdim {

// A fitted log-scaling exponent with convergence diagnostics. `value` may be
// +infinity for balls whose volume sits at the zero floor on all refined
// scales (discrete-like spaces).
struct ExponentEstimate {
    double value = 0.0;
    double ci_halfwidth = 0.0;
    double residual = 0.0; // rms log-fit residual over the fit window
    bool converged = false;

    bool is_infinite() const { return std::isinf(value); }
};

enum class PowerFieldKind { general, polynomially_bounded };

// Exponent-snapping mode. In the polynomially bounded regime dimensions of
// tame metric spaces are rationals with small denominators, so converged
// estimates are snapped to the nearest admissible fraction.
struct PowerFieldMode {
    PowerFieldKind kind = PowerFieldKind::general;
    int max_denominator = 12;

    static PowerFieldMode general() { return {PowerFieldKind::general, 12}; }
    static PowerFieldMode polynomially_bounded(int max_den = 12) {
        if (max_den < 1) throw PreconditionError("PowerFieldMode: max_denominator must be >= 1");
        return {PowerFieldKind::polynomially_bounded, max_den};
    }
};

struct Rational {
    long long num = 0;
    long long den = 1;
    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Best rational approximation with denominator <= max_den, via continued
// fraction convergents and the final semiconvergent.
Rational nearest_rational(double x, long long max_den);

// An exponent after snapping. Exactly one of the three kinds holds:
//  - infinite: the value is +infinity,
//  - rational (snapped=true): num/den in lowest terms,
//  - real (snapped=false): pass-through of the fitted value.
struct SnappedExponent {
    bool infinite = false;
    bool snapped = false;
    long long num = 0;
    long long den = 1;
    double value = 0.0;

    double as_double() const {
        if (infinite) return std::numeric_limits<double>::infinity();
        return snapped ? static_cast<double>(num) / static_cast<double>(den) : value;
    }
    bool operator==(const SnappedExponent& o) const {
        if (infinite != o.infinite || snapped != o.snapped) return false;
        if (infinite) return true;
        if (snapped) return num == o.num && den == o.den;
        return value == o.value;
    }
    std::string str() const;
};

// Weighted least-squares slope of log(volume) against log(scale) over the
// finest half of the positive-volume scales. Convergence is certified by
// comparing against the slope over the finest quarter.
ExponentEstimate fit_log_slope(const VolumeProfile& profile, double tolerance);

// Snaps a converged estimate into the admissible exponent set of `mode`.
SnappedExponent snap_exponent(const ExponentEstimate& est, const PowerFieldMode& mode);

// Fitted limit of log(numer values) / log(denom values) over the finest half
// of a shared scale ladder.
double slope_ratio_check(const VolumeProfile& numer, const VolumeProfile& denom);

} // namespace hausdim
