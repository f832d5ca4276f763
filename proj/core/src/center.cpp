#include "lighthouse/center.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace lighthouse::center {

namespace {

constexpr double kPi = std::numbers::pi;

void require_odd(int n) {
    if (n < 3 || n % 2 == 0)
        throw InvalidN("center variant: n must be an odd integer >= 3");
}

}  // namespace

double apex_x_closed(int n) {
    require_odd(n);
    const double nn = static_cast<double>(n);
    const double s = std::sin(kPi / nn);
    const double c2 = std::cos(kPi / (2.0 * nn)) * std::cos(kPi / (2.0 * nn));
    const double den = nn * nn * s * s - 1.0;
    assert(den > 0.0);  // minimum over n >= 3 is 27/4 - 1
    const double num = std::sqrt(4.0 * nn * nn * c2 - 1.0) + 2.0 * nn * nn * s * c2;
    return num / den;
}

GoverningTangent governing_tangent(int n) {
    require_odd(n);
    // Furthest lighthouse on the upper half sits at polar angle pi - pi/n.
    const double th = kPi - kPi / n;
    const Point source{n * std::cos(th), n * std::sin(th)};
    const Circle target{{static_cast<double>(n), 0.0}, 1.0};

    for (const Point& t : tangent_points(source, target)) {
        const Ray ray = make_ray(source, t - source);
        const auto hit = ray_line_intersection(ray, {0.0, 0.0}, {1.0, 0.0});
        if (hit && hit->x > static_cast<double>(n)) {
            GoverningTangent g;
            g.source_center = source;
            g.tangency = t;
            g.apex = *hit;
            g.x = tangent_length(g.apex, target);
            return g;
        }
    }
    throw Error("governing_tangent: no tangent crosses the axis behind the target");
}

double apex_x_geometric(int n) { return governing_tangent(n).x; }

DarknessResult total_dark_area(int n) {
    if (n < 1) throw InvalidN("total_dark_area: n must be >= 1");
    if (n == 1) return DarknessResult::zero();
    if (n % 2 == 0) return DarknessResult::unbounded();
    const double x = apex_x_closed(n);
    return DarknessResult::finite(total_from_single(n, dark_single(x)));
}

CenterSolution solve_odd(int n) {
    require_odd(n);
    CenterSolution sol;
    sol.n = n;
    sol.x = apex_x_closed(n);
    sol.d_single = dark_single(sol.x);
    sol.d_total = DarknessResult::finite(total_from_single(n, sol.d_single));
    const double nn = static_cast<double>(n);
    sol.y = nn * std::sin(kPi / nn);
    sol.t = 2.0 * nn * std::sin((kPi / 2.0) * (1.0 - 1.0 / nn));
    sol.z = std::sqrt(sol.t * sol.t - 1.0);
    return sol;
}

bool even_unbounded_check(int n) {
    if (n < 2 || n % 2 != 0)
        throw InvalidN("even_unbounded_check: n must be an even integer >= 2");
    const Scene scene = build_scene(n);
    const Circle target = scene.body(0);
    const double cos_half = std::cos(scene.alpha / 2.0);

    // One half-plane suffices by symmetry; n/2 is the opposite lighthouse.
    for (int j = 1; j <= n / 2; ++j) {
        const Point src = scene.centers[static_cast<size_t>(j)];
        const Vec2 face = unit(scene.placement_center - src);
        for (const Point& t : tangent_points(src, target)) {
            const Vec2 dir = unit(t - src);
            if (dot(dir, face) < cos_half - 1e-12) continue;  // not emittable
            const auto hit = ray_line_intersection({src, dir}, {0.0, 0.0}, {1.0, 0.0});
            if (!hit || hit->x <= static_cast<double>(n)) continue;
            bool blocked = false;
            for (int i = 0; i < n && !blocked; ++i) {
                if (i == j) continue;
                blocked = segment_hits_disk(src, *hit, scene.body(i));
            }
            if (!blocked) return false;  // a finite apex exists
        }
    }
    return true;
}

std::vector<std::pair<int, double>> odd_growth_scan(int n_max) {
    if (n_max < 3) throw InvalidN("odd_growth_scan: n_max must be >= 3");
    std::vector<std::pair<int, double>> rows;
    for (int n = 3; n <= n_max; n += 2)
        rows.emplace_back(n, total_from_single(n, dark_single(apex_x_closed(n))));
    return rows;
}

}  // namespace lighthouse::center
