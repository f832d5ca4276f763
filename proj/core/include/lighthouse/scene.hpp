#pragma once

#include <vector>

#include "lighthouse/geom.hpp"

namespace lighthouse {

/// The canonical configuration: n unit circles, each centered n units from the
/// placement center (the origin), lighthouse 0 on the positive x-axis and the
/// rest counter-clockwise at angular steps of alpha = 2*pi/n.
struct Scene {
    int n = 0;
    Point placement_center;
    std::vector<Point> centers;
    double radius = 1.0;
    double alpha = 0.0;

    Circle body(int i) const { return {centers.at(static_cast<size_t>(i)), radius}; }
};

Scene build_scene(int n);

/// Distance between neighboring lighthouse centers, 2n*sin(pi/n).
double neighbor_distance(int n);

struct GrayArea {
    double single = 0.0;  // pi(1 - 1/n), the non-illuminating body of one lighthouse
    double total = 0.0;   // pi(n - 1)
};

GrayArea gray_area(int n);

/// Total dark area from the per-lighthouse value: D(n) = n * d(n).
double total_from_single(int n, double d_single);

}  // namespace lighthouse
