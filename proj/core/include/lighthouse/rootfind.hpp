#pragma once

#include <functional>

namespace lighthouse {

/// Brent's method with bisection fallback on the bracket [lo, hi].
/// f(lo) and f(hi) must have opposite signs, otherwise NoRootInBracket fires.
/// With xtol = 0 the iteration runs down to machine precision.
double brent(const std::function<double(double)>& f, double lo, double hi,
             double xtol = 0.0, int max_iter = 200);

}  // namespace lighthouse
