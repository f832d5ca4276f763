#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "lighthouse/error.hpp"

namespace lighthouse {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator-(Vec2 v) { return {-v.x, -v.y}; }

inline Vec2 operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
inline Point operator-(Point p, Vec2 v) { return {p.x - v.x, p.y - v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline Vec2 unit(Vec2 v) {
    const double n = norm(v);
    if (n == 0.0) throw DegenerateInput("unit: zero-length vector");
    return {v.x / n, v.y / n};
}

/// A circle of positive finite radius.
struct Circle {
    Point center;
    double radius = 1.0;
};

/// Half-line from `origin` along the unit vector `direction`.
struct Ray {
    Point origin;
    Vec2 direction;
};

inline Ray make_ray(Point origin, Vec2 direction) { return {origin, unit(direction)}; }

/// A tangency: the point where a line touches a circle, plus the line direction.
struct TangencyPair {
    Point line_point;
    Vec2 line_dir;
};

/// One line tangent to two circles, described by its tangency on each.
struct CommonTangent {
    TangencyPair on_first;
    TangencyPair on_second;
};

/// Length of the tangent segment from p to its tangency on c (sqrt(d^2 - r^2)).
double tangent_length(Point p, const Circle& c, double inside_tol = 1e-12);

/// Tangency points on c for tangent lines through p.
/// Two points for p strictly outside, one when p sits on the circle.
std::vector<Point> tangent_points(Point p, const Circle& c, double boundary_tol = 1e-12);

/// All lines tangent to both circles (up to 4). Coincident internal/external
/// tangents for touching circles are reported once.
std::vector<CommonTangent> common_tangents(const Circle& a, const Circle& b, double tol = 1e-12);

/// True iff the closed segment ab passes strictly closer than r - tol to the
/// disk center. Grazing at exactly r does not count as a hit.
bool segment_hits_disk(Point a, Point b, const Circle& c, double tol = 1e-9);

/// Intersection of a ray with an infinite line, if it exists at nonnegative
/// ray parameter and the directions are not parallel within parallel_tol.
std::optional<Point> ray_line_intersection(const Ray& ray, Point line_point, Vec2 line_dir,
                                           double parallel_tol = 1e-12);

}  // namespace lighthouse
