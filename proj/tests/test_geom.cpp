#include <doctest.h>

#include <cmath>

#include "lighthouse/geom.hpp"
#include "test_util.hpp"

using namespace lighthouse;

namespace {

Point reflect_across(Point q, Point a, Point b) {
    const Vec2 d = unit(b - a);
    const Vec2 aq = q - a;
    const double along = dot(aq, d);
    const Point foot = a + along * d;
    return {2.0 * foot.x - q.x, 2.0 * foot.y - q.y};
}

double line_point_distance(Point p, Point on_line, Vec2 dir) {
    return std::abs(cross(unit(dir), p - on_line));
}

}  // namespace

TEST_CASE("tangent_length") {
    const Circle unit_circle{{0.0, 0.0}, 1.0};

    CHECK(tangent_length({2.0, 0.0}, unit_circle) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    // distance 3*sqrt(3) from a unit circle gives sqrt(26)
    CHECK(tangent_length({3.0 * std::sqrt(3.0), 0.0}, unit_circle) ==
          doctest::Approx(std::sqrt(26.0)).epsilon(1e-12));
    CHECK(tangent_length({1.0, 0.0}, unit_circle) == doctest::Approx(0.0));
    CHECK_THROWS_AS(tangent_length({0.5, 0.0}, unit_circle), PointInsideCircle);
}

TEST_CASE("tangent_length Pythagoras property") {
    testutil::Gen gen(101);
    for (int i = 0; i < 300; ++i) {
        const Circle c{{gen.uniform(-10, 10), gen.uniform(-10, 10)}, gen.uniform(0.1, 5.0)};
        const double d = c.radius * gen.uniform(1.0, 8.0);
        const double th = gen.uniform(0, 6.28318);
        const Point p{c.center.x + d * std::cos(th), c.center.y + d * std::sin(th)};
        const double L = tangent_length(p, c);
        CHECK(L * L + c.radius * c.radius ==
              doctest::Approx(d * d).epsilon(1e-9));
    }
}

TEST_CASE("tangent_points") {
    const Circle c{{0.0, 0.0}, 1.0};

    SUBCASE("two points from outside") {
        const auto pts = tangent_points({2.0, 0.0}, c);
        REQUIRE(pts.size() == 2);
        for (const Point& t : pts) {
            CHECK(t.x == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(std::abs(t.y) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
        }
        CHECK(pts[0].y * pts[1].y < 0.0);
    }
    SUBCASE("degenerate point on the circle") {
        const auto pts = tangent_points({1.0, 0.0}, c);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].x == doctest::Approx(1.0));
        CHECK(pts[0].y == doctest::Approx(0.0));
    }
    SUBCASE("inside") {
        CHECK_THROWS_AS(tangent_points({0.0, 0.0}, c), PointInsideCircle);
    }
}

TEST_CASE("tangent_points properties: on circle, perpendicular, mirrored") {
    testutil::Gen gen(202);
    for (int i = 0; i < 300; ++i) {
        const Circle c{{gen.uniform(-5, 5), gen.uniform(-5, 5)}, gen.uniform(0.2, 3.0)};
        const double d = c.radius * gen.uniform(1.001, 10.0);
        const double th = gen.uniform(0, 6.28318);
        const Point p{c.center.x + d * std::cos(th), c.center.y + d * std::sin(th)};
        const auto pts = tangent_points(p, c);
        REQUIRE(pts.size() == 2);
        for (const Point& t : pts) {
            CHECK(std::abs(distance(t, c.center) - c.radius) <= 1e-10);
            CHECK(std::abs(dot(t - p, t - c.center)) <= 1e-10 * d);
        }
        const Point mirrored = reflect_across(pts[0], p, c.center);
        CHECK(distance(mirrored, pts[1]) <= 1e-10);
    }
}

TEST_CASE("common_tangents") {
    SUBCASE("separated equal circles: 4 tangents, externals parallel to the center line") {
        const Circle a{{0.0, 0.0}, 1.0}, b{{4.0, 0.0}, 1.0};
        const auto tans = common_tangents(a, b);
        REQUIRE(tans.size() == 4);
        int parallel = 0;
        const Vec2 axis = unit(b.center - a.center);
        for (const auto& ct : tans) {
            CHECK(line_point_distance(a.center, ct.on_first.line_point, ct.on_first.line_dir) ==
                  doctest::Approx(a.radius).epsilon(1e-10));
            CHECK(line_point_distance(b.center, ct.on_first.line_point, ct.on_first.line_dir) ==
                  doctest::Approx(b.radius).epsilon(1e-10));
            if (std::abs(cross(ct.on_first.line_dir, axis)) < 1e-10) ++parallel;
        }
        CHECK(parallel == 2);
    }
    SUBCASE("externally tangent circles: internal pair coincides, 3 lines") {
        const auto tans = common_tangents({{0.0, 0.0}, 1.0}, {{2.0, 0.0}, 1.0});
        CHECK(tans.size() == 3);
    }
    SUBCASE("one circle strictly inside the other") {
        CHECK_THROWS_AS(common_tangents({{0.0, 0.0}, 1.0}, {{0.0, 0.0}, 3.0}), NoTangents);
    }
    SUBCASE("identical circles") {
        CHECK_THROWS_AS(common_tangents({{1.0, 2.0}, 1.5}, {{1.0, 2.0}, 1.5}), DegenerateInput);
    }
}

TEST_CASE("common_tangents distance property on random pairs") {
    testutil::Gen gen(303);
    int seen = 0;
    for (int i = 0; i < 200; ++i) {
        const Circle a{{gen.uniform(-5, 5), gen.uniform(-5, 5)}, gen.uniform(0.2, 2.0)};
        const Circle b{{gen.uniform(-5, 5), gen.uniform(-5, 5)}, gen.uniform(0.2, 2.0)};
        try {
            for (const auto& ct : common_tangents(a, b)) {
                ++seen;
                CHECK(line_point_distance(a.center, ct.on_first.line_point,
                                          ct.on_first.line_dir) ==
                      doctest::Approx(a.radius).epsilon(1e-9));
                CHECK(line_point_distance(b.center, ct.on_second.line_point,
                                          ct.on_second.line_dir) ==
                      doctest::Approx(b.radius).epsilon(1e-9));
                CHECK(std::abs(distance(ct.on_first.line_point, a.center) - a.radius) <= 1e-9);
                CHECK(std::abs(distance(ct.on_second.line_point, b.center) - b.radius) <= 1e-9);
            }
        } catch (const NoTangents&) {
        } catch (const DegenerateInput&) {
        }
    }
    CHECK(seen > 100);
}

TEST_CASE("segment_hits_disk") {
    const Circle disk{{0.0, 0.0}, 1.0};
    CHECK(segment_hits_disk({-3.0, 0.0}, {3.0, 0.0}, disk));
    CHECK_FALSE(segment_hits_disk({-3.0, 1.0}, {3.0, 1.0}, disk));  // exact graze
    CHECK_FALSE(segment_hits_disk({-3.0, 2.0}, {3.0, 2.0}, disk));
    // endpoints outside, segment stops short of the disk
    CHECK_FALSE(segment_hits_disk({-3.0, 0.0}, {-2.0, 0.0}, disk));

    testutil::Gen gen(404);
    for (int i = 0; i < 300; ++i) {
        const Point a{gen.uniform(-5, 5), gen.uniform(-5, 5)};
        const Point b{gen.uniform(-5, 5), gen.uniform(-5, 5)};
        const Circle c{{gen.uniform(-5, 5), gen.uniform(-5, 5)}, gen.uniform(0.1, 2.0)};
        CHECK(segment_hits_disk(a, b, c) == segment_hits_disk(b, a, c));
    }
}

TEST_CASE("ray_line_intersection") {
    const Ray right = make_ray({0.0, 0.0}, {1.0, 0.0});
    const auto hit = ray_line_intersection(right, {5.0, 0.0}, {0.0, 1.0});
    REQUIRE(hit.has_value());
    CHECK(hit->x == doctest::Approx(5.0));
    CHECK(hit->y == doctest::Approx(0.0));

    CHECK_FALSE(ray_line_intersection(right, {0.0, 1.0}, {1.0, 0.0}).has_value());  // parallel
    const Ray left = make_ray({0.0, 0.0}, {-1.0, 0.0});
    CHECK_FALSE(ray_line_intersection(left, {5.0, 0.0}, {0.0, 1.0}).has_value());  // behind
}
