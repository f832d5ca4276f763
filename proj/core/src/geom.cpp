#include "lighthouse/geom.hpp"

#include <algorithm>

namespace lighthouse {

double tangent_length(Point p, const Circle& c, double inside_tol) {
    const double d = distance(p, c.center);
    if (d < c.radius - inside_tol)
        throw PointInsideCircle("tangent_length: point lies inside the circle");
    const double sq = d * d - c.radius * c.radius;
    return std::sqrt(std::max(0.0, sq));
}

std::vector<Point> tangent_points(Point p, const Circle& c, double boundary_tol) {
    const double r = c.radius;
    const double d = distance(p, c.center);
    if (d < r - boundary_tol)
        throw PointInsideCircle("tangent_points: point lies inside the circle");
    if (d <= r + boundary_tol) {
        // degenerate: p on the circle, the tangent touches at p itself
        const Vec2 radial = unit(p - c.center);
        return {c.center + r * radial};
    }
    const double base = std::atan2(p.y - c.center.y, p.x - c.center.x);
    const double half = std::acos(std::clamp(r / d, -1.0, 1.0));
    return {
        {c.center.x + r * std::cos(base + half), c.center.y + r * std::sin(base + half)},
        {c.center.x + r * std::cos(base - half), c.center.y + r * std::sin(base - half)},
    };
}

std::vector<CommonTangent> common_tangents(const Circle& a, const Circle& b, double tol) {
    const double d = distance(a.center, b.center);
    if (d <= tol && std::abs(a.radius - b.radius) <= tol)
        throw DegenerateInput("common_tangents: circles are identical");
    if (d < std::abs(a.radius - b.radius) - tol)
        throw NoTangents("common_tangents: one circle lies strictly inside the other");

    const Vec2 u = unit(b.center - a.center);
    const Vec2 v = perp(u);
    std::vector<CommonTangent> out;

    // A line {x : n.x = q} with |n| = 1 is tangent to both circles when
    // n.a - q = r_a and n.b - q = sigma r_b; subtracting fixes n.u.
    for (const double sigma : {+1.0, -1.0}) {
        const double kappa = (sigma * b.radius - a.radius) / d;
        if (std::abs(kappa) > 1.0 + tol) continue;
        const double s = std::sqrt(std::max(0.0, 1.0 - kappa * kappa));
        const int branches = (s < tol) ? 1 : 2;  // coincident pair collapses
        for (int i = 0; i < branches; ++i) {
            const double pm = (i == 0) ? +1.0 : -1.0;
            const Vec2 n = {kappa * u.x + pm * s * v.x, kappa * u.y + pm * s * v.y};
            const Point t1 = a.center - a.radius * n;
            const Point t2 = b.center - (sigma * b.radius) * n;
            Vec2 dir = perp(n);
            if (distance(t1, t2) > tol) dir = unit(t2 - t1);
            out.push_back({{t1, dir}, {t2, dir}});
        }
    }
    if (out.empty()) throw NoTangents("common_tangents: no common tangent exists");
    return out;
}

bool segment_hits_disk(Point a, Point b, const Circle& c, double tol) {
    const double reach = c.radius - tol;
    if (reach <= 0.0) return false;
    const Vec2 ab = b - a;
    const double len_sq = norm_sq(ab);
    double t = 0.0;
    if (len_sq > 0.0) t = std::clamp(dot(c.center - a, ab) / len_sq, 0.0, 1.0);
    const Point q = a + t * ab;
    return norm_sq(q - c.center) < reach * reach;
}

std::optional<Point> ray_line_intersection(const Ray& ray, Point line_point, Vec2 line_dir,
                                           double parallel_tol) {
    const double denom = cross(ray.direction, line_dir);
    // both directions are unit vectors, so |denom| = sin(angle between them)
    if (std::abs(denom) <= parallel_tol) return std::nullopt;
    const double t = cross(line_point - ray.origin, line_dir) / denom;
    if (t < 0.0) return std::nullopt;
    return ray.origin + t * ray.direction;
}

}  // namespace lighthouse
