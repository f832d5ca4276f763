#include "lighthouse/scene.hpp"

#include <numbers>

namespace lighthouse {

Scene build_scene(int n) {
    if (n < 1) throw InvalidN("build_scene: n must be >= 1");
    Scene s;
    s.n = n;
    s.placement_center = {0.0, 0.0};
    s.radius = 1.0;
    s.alpha = 2.0 * std::numbers::pi / n;
    s.centers.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double th = s.alpha * i;
        s.centers.push_back({n * std::cos(th), n * std::sin(th)});
    }
    return s;
}

double neighbor_distance(int n) {
    if (n < 2) throw InvalidN("neighbor_distance: n must be >= 2");
    return 2.0 * n * std::sin(std::numbers::pi / n);
}

GrayArea gray_area(int n) {
    if (n < 1) throw InvalidN("gray_area: n must be >= 1");
    const double single = std::numbers::pi * (1.0 - 1.0 / n);
    return {single, std::numbers::pi * (n - 1.0)};
}

double total_from_single(int n, double d_single) {
    return n * d_single;
}

}  // namespace lighthouse
