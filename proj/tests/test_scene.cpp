#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lighthouse/scene.hpp"

using namespace lighthouse;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("build_scene") {
    SUBCASE("n = 1") {
        const Scene s = build_scene(1);
        CHECK(s.centers.size() == 1);
        CHECK(s.centers[0].x == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s.centers[0].y == doctest::Approx(0.0));
        CHECK(s.alpha == doctest::Approx(2.0 * kPi));
    }
    SUBCASE("n = 4") {
        const Scene s = build_scene(4);
        REQUIRE(s.centers.size() == 4);
        CHECK(s.alpha == doctest::Approx(kPi / 2.0));
        CHECK(distance(s.centers[0], {4.0, 0.0}) <= 1e-12);
        CHECK(distance(s.centers[1], {0.0, 4.0}) <= 1e-12);
        CHECK(distance(s.centers[2], {-4.0, 0.0}) <= 1e-12);
        CHECK(distance(s.centers[3], {0.0, -4.0}) <= 1e-12);
    }
    SUBCASE("n = 0 rejected") { CHECK_THROWS_AS(build_scene(0), InvalidN); }

    SUBCASE("placement invariants") {
        for (const int n : {2, 3, 7, 12, 100}) {
            const Scene s = build_scene(n);
            for (const Point& c : s.centers)
                CHECK(std::abs(distance(c, s.placement_center) - n) <= n * 1e-12);
            for (int i = 0; i < n; ++i) {
                const Point a = s.centers[static_cast<size_t>(i)];
                const Point b = s.centers[static_cast<size_t>((i + 1) % n)];
                double step =
                    std::atan2(cross(a - s.placement_center, b - s.placement_center),
                               dot(a - s.placement_center, b - s.placement_center));
                if (step < 0.0) step += 2.0 * kPi;  // n = 2 lands on the pi/-pi seam
                CHECK(step == doctest::Approx(s.alpha).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("neighbor_distance") {
    CHECK(neighbor_distance(2) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(neighbor_distance(6) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(std::abs(neighbor_distance(1000000) - 2.0 * kPi) <= 1e-9);
    CHECK_THROWS_AS(neighbor_distance(1), InvalidN);

    SUBCASE("matches the built scene") {
        for (const int n : {2, 3, 5, 17, 64}) {
            const Scene s = build_scene(n);
            CHECK(std::abs(neighbor_distance(n) - distance(s.centers[0], s.centers[1])) <= 1e-10);
        }
    }
    SUBCASE("no overlap or touch, monotone growth") {
        double prev = 0.0;
        for (int n = 2; n <= 100; ++n) {
            const double d = neighbor_distance(n);
            CHECK(d > 2.0);
            CHECK(d > prev);
            prev = d;
        }
        for (int n = 128; n <= (1 << 20); n *= 2) CHECK(neighbor_distance(n) > 2.0);
    }
    SUBCASE("Steiner tangency equation has no integer solution") {
        // n sin(pi/n) = 1 would mean tangent neighbors; it stays above 1
        for (int n = 2; n <= 10000; ++n) CHECK(n * std::sin(kPi / n) > 1.0);
    }
}

TEST_CASE("gray_area") {
    const GrayArea g1 = gray_area(1);
    CHECK(g1.single == doctest::Approx(0.0));
    CHECK(g1.total == doctest::Approx(0.0));

    const GrayArea g2 = gray_area(2);
    CHECK(g2.single == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(g2.total == doctest::Approx(kPi).epsilon(1e-12));

    const GrayArea g5 = gray_area(5);
    CHECK(g5.single == doctest::Approx(4.0 * kPi / 5.0).epsilon(1e-12));
    CHECK(g5.total == doctest::Approx(4.0 * kPi).epsilon(1e-12));

    for (int n = 1; n <= 200; ++n) {
        const GrayArea g = gray_area(n);
        CHECK(std::abs(g.total - n * g.single) <= 1e-12 * std::max(1.0, g.total));
    }
}

TEST_CASE("total_from_single") {
    CHECK(total_from_single(3, 1.6792) == doctest::Approx(5.0376).epsilon(1e-12));
    CHECK(total_from_single(7, 0.0) == doctest::Approx(0.0));
    CHECK(total_from_single(5, 3.3570) == doctest::Approx(16.785).epsilon(1e-12));
}
