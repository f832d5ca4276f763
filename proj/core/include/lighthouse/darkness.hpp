#pragma once

#include <cmath>

namespace lighthouse {

/// Which light-source model a computation refers to.
enum class Variant { center, arc };

/// Classified total dark area: exactly zero, a finite value, or unbounded.
/// Unbounded is an explicit tag, never a floating-point infinity.
struct DarknessResult {
    enum class Kind { zero, finite, unbounded };

    Kind kind = Kind::zero;
    double value = 0.0;  // meaningful only when kind == finite

    static DarknessResult zero() { return {Kind::zero, 0.0}; }
    static DarknessResult unbounded() { return {Kind::unbounded, 0.0}; }
    static DarknessResult finite(double v) { return {Kind::finite, v}; }

    bool is_zero() const { return kind == Kind::zero; }
    bool is_finite() const { return kind == Kind::finite; }
    bool is_unbounded() const { return kind == Kind::unbounded; }
};

/// Dark area behind one lighthouse given the apex parameter x: x - arctan(x).
inline double dark_single(double x) { return x - std::atan(x); }

}  // namespace lighthouse
