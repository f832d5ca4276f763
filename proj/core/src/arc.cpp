#include "lighthouse/arc.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "lighthouse/rootfind.hpp"

namespace lighthouse::arc {

namespace {

constexpr double kPi = std::numbers::pi;

double facing_angle(const Scene& scene, int i) {
    const Point c = scene.centers[static_cast<size_t>(i)];
    return std::atan2(scene.placement_center.y - c.y, scene.placement_center.x - c.x);
}

/// Signed angular difference wrapped to (-pi, pi].
double wrap_angle(double a) {
    a = std::fmod(a + kPi, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a - kPi;
}

/// Assemble a candidate if the ray emission->tangency crosses the positive
/// x-axis beyond the target.
std::optional<TangentSolution> make_candidate(const Scene& scene, int k, Point emission,
                                              Point tangency, RayFamily family) {
    if (distance(emission, tangency) < 1e-12) return std::nullopt;
    const Ray ray = make_ray(emission, tangency - emission);
    const auto hit = ray_line_intersection(ray, {0.0, 0.0}, {1.0, 0.0});
    if (!hit || hit->x <= static_cast<double>(scene.n)) return std::nullopt;
    TangentSolution sol;
    sol.source_k = k;
    sol.emission = emission;
    sol.tangency = tangency;
    sol.apex = *hit;
    sol.x = distance(tangency, sol.apex);
    sol.family = family;
    return sol;
}

}  // namespace

ArcSpan illuminated_arc(const Scene& scene, int i) {
    if (i < 0 || i >= scene.n) throw IndexOutOfRange("illuminated_arc: bad lighthouse index");
    const Point c = scene.centers[static_cast<size_t>(i)];
    const double face = facing_angle(scene, i);
    const double half = scene.alpha / 2.0;  // pi for n = 1: the full circle
    ArcSpan span;
    span.lighthouse_index = i;
    span.center_angle = half;
    span.endpoint_a = {c.x + scene.radius * std::cos(face - half),
                       c.y + scene.radius * std::sin(face - half)};
    span.endpoint_b = {c.x + scene.radius * std::cos(face + half),
                       c.y + scene.radius * std::sin(face + half)};
    return span;
}

std::vector<TangentSolution> candidate_rays(const Scene& scene, int k) {
    if (k < 1 || k > scene.n / 2) throw IndexOutOfRange("candidate_rays: k out of 1..n/2");
    const Circle target = scene.body(0);
    const Circle source = scene.body(k);
    const double face = facing_angle(scene, k);
    const double half = scene.alpha / 2.0;

    std::vector<TangentSolution> out;

    const ArcSpan span = illuminated_arc(scene, k);
    for (const Point& e : {span.endpoint_a, span.endpoint_b}) {
        for (const Point& t : tangent_points(e, target)) {
            if (auto sol = make_candidate(scene, k, e, t, RayFamily::endpoint_tangent))
                out.push_back(*sol);
        }
    }

    for (const CommonTangent& ct : common_tangents(source, target)) {
        const Point e = ct.on_first.line_point;
        const double ang = std::atan2(e.y - source.center.y, e.x - source.center.x);
        if (std::abs(wrap_angle(ang - face)) > half + 1e-12) continue;  // outside the arc
        if (auto sol = make_candidate(scene, k, e, ct.on_second.line_point,
                                      RayFamily::common_tangent))
            out.push_back(*sol);
    }
    return out;
}

bool is_admissible(const Scene& scene, const TangentSolution& sol, double graze_tol) {
    for (int i = 0; i < scene.n; ++i)
        if (segment_hits_disk(sol.emission, sol.apex, scene.body(i), graze_tol)) return false;
    return true;
}

std::pair<int, TangentSolution> find_illuminator(const Scene& scene) {
    if (scene.n < 2) throw InvalidN("find_illuminator: n must be >= 2");
    std::optional<std::pair<int, TangentSolution>> best;
    for (int k = 1; k <= scene.n / 2; ++k) {
        for (const TangentSolution& sol : candidate_rays(scene, k)) {
            if (!is_admissible(scene, sol)) continue;
            if (!best || sol.x < best->second.x) best = {k, sol};
        }
    }
    if (!best) throw NoIlluminator("find_illuminator: no admissible candidate for any k");
    return *best;
}

double apex_x_arc(int n) {
    if (n < 3) throw InvalidN("apex_x_arc: n must be >= 3");
    return find_illuminator(build_scene(n)).second.x;
}

double solve_tangency_equation(int n) {
    std::function<double(double)> f;
    switch (n) {
        case 3: {
            // 1 / (3 sqrt(3) / 2) = x / (7/2 + sqrt(1 + x^2))
            const double lhs = 1.0 / (3.0 * std::sqrt(3.0) / 2.0);
            f = [lhs](double x) { return lhs - x / (3.5 + std::sqrt(1.0 + x * x)); };
            break;
        }
        case 4: {
            // 1 + (4 - 1/sqrt(2)) sqrt(1 + x^2) = x sqrt(32 - 8 sqrt(2))
            const double c = 4.0 - 1.0 / std::sqrt(2.0);
            const double s = std::sqrt(32.0 - 8.0 * std::sqrt(2.0));
            f = [c, s](double x) { return 1.0 + c * std::sqrt(1.0 + x * x) - s * x; };
            break;
        }
        case 5: {
            // 1 / (16 - 6 + 2 sqrt(5)) = (1 + x^2) / (x^2 + b^2 - 1 + 2x sqrt(b^2 - 1)),
            // b^2 = 41 + (5/4)(6 - 2 sqrt(5)) - 15 sqrt(6 - 2 sqrt(5)).
            // The sqrt(6 - 2 sqrt(5)) radicand is the reading whose root lands
            // at the geometric value 1.2471; the (6 + 2 sqrt(5)) variant gives ~0.31.
            const double s5 = std::sqrt(5.0);
            const double b2 = 41.0 + 1.25 * (6.0 - 2.0 * s5) - 15.0 * std::sqrt(6.0 - 2.0 * s5);
            const double lhs = 1.0 / (10.0 + 2.0 * s5);
            f = [lhs, b2](double x) {
                const double denom = x * x + b2 - 1.0 + 2.0 * x * std::sqrt(b2 - 1.0);
                return lhs - (1.0 + x * x) / denom;
            };
            break;
        }
        default:
            throw UnsupportedN("solve_tangency_equation: only n in {3, 4, 5}");
    }
    const double root = brent(f, 1e-6, 100.0);
    if (std::abs(f(root)) > 1e-12)
        throw NoRootInBracket("solve_tangency_equation: residual above 1e-12");
    return root;
}

DarknessResult total_dark_area(int n) {
    if (n < 1) throw InvalidN("total_dark_area: n must be >= 1");
    if (n == 1) return DarknessResult::zero();
    try {
        const auto [k, sol] = find_illuminator(build_scene(n));
        (void)k;
        return DarknessResult::finite(total_from_single(n, dark_single(sol.x)));
    } catch (const NoIlluminator&) {
        return DarknessResult::unbounded();
    }
}

std::vector<IlluminatorRow> illuminator_scan(int n_max) {
    if (n_max < 3) throw InvalidN("illuminator_scan: n_max must be >= 3");
    std::vector<IlluminatorRow> rows;
    rows.reserve(static_cast<size_t>(n_max - 2));
    for (int n = 3; n <= n_max; ++n) {
        const auto [k, sol] = find_illuminator(build_scene(n));
        rows.push_back({n, k, sol.x});
    }
    return rows;
}

}  // namespace lighthouse::arc
