#pragma once

#include <utility>
#include <vector>

#include "lighthouse/darkness.hpp"
#include "lighthouse/geom.hpp"
#include "lighthouse/scene.hpp"

namespace lighthouse::center {

/// Full solution for an odd-n scene with the point source at each center,
/// including the derivation intermediates y, z, t.
struct CenterSolution {
    int n = 0;
    double x = 0.0;         // apex parameter |AB|
    double d_single = 0.0;  // x - arctan(x)
    DarknessResult d_total;
    double y = 0.0;  // n sin(pi/n)
    double z = 0.0;  // sqrt(t^2 - 1)
    double t = 0.0;  // 2n sin((pi/2)(1 - 1/n))
};

/// The governing tangent construction for odd n: source center, its tangency
/// on the target circle, and the apex where the tangent crosses the axis.
struct GoverningTangent {
    Point source_center;
    Point tangency;
    Point apex;
    double x = 0.0;
};

/// Closed-form apex parameter for odd n >= 3.
double apex_x_closed(int n);

/// Apex parameter from the explicit tangent construction: tangent from the
/// furthest lighthouse to the target circle, apex at its axis crossing.
/// Agrees with apex_x_closed to ~1e-12.
double apex_x_geometric(int n);

/// The construction behind apex_x_geometric, exposed for rendering and tests.
GoverningTangent governing_tangent(int n);

DarknessResult total_dark_area(int n);

CenterSolution solve_odd(int n);

/// True iff no source lighthouse can emit an unblocked tangent ray, within
/// its illumination cone, whose axis crossing falls behind the target.
/// Holds for every even n; the dark region is unbounded in that case.
bool even_unbounded_check(int n);

/// D(n) for n = 3, 5, ..., n_max.
std::vector<std::pair<int, double>> odd_growth_scan(int n_max);

}  // namespace lighthouse::center
