#include "lighthouse/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "lighthouse/rng.hpp"

namespace lighthouse::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRectHalfHeight = 1.2;  // shadows can bulge slightly past the silhouette
constexpr int kChunks = 512;
constexpr double kMaxAdaptiveDepth = 1e4;

void validate(const OracleConfig& cfg) {
    if (cfg.arc_samples < 2) throw Error("oracle: arc_samples must be >= 2");
    for (size_t i = 1; i < cfg.probe_distances.size(); ++i)
        if (cfg.probe_distances[i] <= cfg.probe_distances[i - 1])
            throw Error("oracle: probe distances must be strictly increasing");
}

/// Squared-distance segment/disk test, the hot inner loop.
inline bool seg_enters_disk(Point a, Point b, Point c, double reach_sq) {
    const double abx = b.x - a.x, aby = b.y - a.y;
    const double acx = c.x - a.x, acy = c.y - a.y;
    const double len_sq = abx * abx + aby * aby;
    double t = 0.0;
    if (len_sq > 0.0) t = std::clamp((acx * abx + acy * aby) / len_sq, 0.0, 1.0);
    const double qx = acx - t * abx, qy = acy - t * aby;
    return qx * qx + qy * qy < reach_sq;
}

/// Precomputed scene data shared by every sample of one estimate run.
struct Caster {
    const Scene& scene;
    Variant variant;
    double reach_sq;          // (r - graze_tol)^2
    double cos_half;          // cos(alpha / 2)
    std::vector<Vec2> faces;  // unit vectors toward the placement center
    std::vector<std::vector<Point>> emitters;  // arc variant, target-side endpoint first
    std::vector<int> disk_order;               // target disk first
    std::vector<int> src_upper, src_lower;     // sources by proximity to the target

    Caster(const Scene& s, Variant v, const OracleConfig& cfg) : scene(s), variant(v) {
        const double reach = s.radius - cfg.graze_tol;
        reach_sq = reach > 0.0 ? reach * reach : 0.0;
        cos_half = std::cos(s.alpha / 2.0);
        faces.reserve(static_cast<size_t>(s.n));
        for (const Point& c : s.centers) faces.push_back(unit(s.placement_center - c));

        disk_order.push_back(0);
        for (int d = 1; d <= s.n / 2; ++d) {
            disk_order.push_back(d);
            if (d != s.n - d) disk_order.push_back(s.n - d);
        }

        for (int d = 1; d <= s.n / 2; ++d) {
            src_upper.push_back(d);
            if (d != s.n - d) src_upper.push_back(s.n - d);
            src_lower.push_back(s.n - d);
            if (d != s.n - d) src_lower.push_back(d);
        }
        src_upper.push_back(0);
        src_lower.push_back(0);

        if (variant == Variant::arc) {
            const int m = cfg.arc_samples;
            emitters.resize(static_cast<size_t>(s.n));
            for (int i = 0; i < s.n; ++i) {
                auto& pts = emitters[static_cast<size_t>(i)];
                pts.reserve(static_cast<size_t>(m));
                const Point c = s.centers[static_cast<size_t>(i)];
                const double face = std::atan2(-c.y, -c.x);
                if (s.n == 1) {
                    for (int j = 0; j < m; ++j) {
                        const double a = face + 2.0 * kPi * j / m;
                        pts.push_back({c.x + std::cos(a), c.y + std::sin(a)});
                    }
                } else {
                    const double side = c.y >= 0.0 ? +1.0 : -1.0;  // target-side endpoint first
                    const double half = s.alpha / 2.0;
                    for (int j = 0; j < m; ++j) {
                        const double a = face + side * half - side * s.alpha * j / (m - 1);
                        pts.push_back({c.x + std::cos(a), c.y + std::sin(a)});
                    }
                }
            }
        }
    }

    bool inside_any_body(Point p) const {
        for (const Point& c : scene.centers) {
            const double dx = p.x - c.x, dy = p.y - c.y;
            if (dx * dx + dy * dy < scene.radius * scene.radius) return true;
        }
        return false;
    }

    bool segment_clear(Point a, Point p, int skip) const {
        for (const int i : disk_order) {
            if (i == skip) continue;
            if (seg_enters_disk(a, p, scene.centers[static_cast<size_t>(i)], reach_sq))
                return false;
        }
        return true;
    }

    bool lit(Point p) const {
        const auto& order = p.y >= 0.0 ? src_upper : src_lower;
        if (variant == Variant::center) {
            for (const int i : order) {
                const Point s = scene.centers[static_cast<size_t>(i)];
                const Vec2 d = p - s;
                const double dn = norm(d);
                if (dn == 0.0) continue;
                if (dot(d, faces[static_cast<size_t>(i)]) < (cos_half - 1e-12) * dn)
                    continue;  // outside the illumination cone
                if (segment_clear(s, p, i)) return true;
            }
            return false;
        }
        for (const int i : order) {
            for (const Point& e : emitters[static_cast<size_t>(i)])
                if (segment_clear(e, p, -1)) return true;
        }
        return false;
    }
};

/// Deterministic grid probe of the strip [x1 - 0.5, x1] x [-h, h]:
/// true iff every grid point is lit.
bool margin_strip_lit(const Caster& caster, double x1) {
    constexpr int nx = 16, ny = 9;
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            const Point p{x1 - 0.5 + 0.5 * ix / (nx - 1),
                          -kRectHalfHeight + 2.0 * kRectHalfHeight * iy / (ny - 1)};
            if (caster.inside_any_body(p)) continue;
            if (!caster.lit(p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_illuminated(const Scene& scene, Variant variant, Point p, const OracleConfig& cfg) {
    validate(cfg);
    for (const Point& c : scene.centers)
        if (norm_sq(p - c) < scene.radius * scene.radius - 1e-12)
            throw PointInsideBody("is_illuminated: point lies inside a lighthouse body");
    const Caster caster(scene, variant, cfg);
    return caster.lit(p);
}

AreaEstimate estimate_dark_area(const Scene& scene, Variant variant, const OracleConfig& cfg,
                                long long samples, std::uint64_t seed,
                                std::optional<double> apex_distance_hint) {
    validate(cfg);
    if (samples < 1) throw Error("estimate_dark_area: samples must be >= 1");
    const Caster caster(scene, variant, cfg);

    double depth;  // rectangle length beyond the target's far edge
    if (apex_distance_hint) {
        depth = 2.0 * *apex_distance_hint;
    } else {
        depth = 4.0;
        while (!margin_strip_lit(caster, scene.n + 1.0 + depth)) {
            depth *= 2.0;
            if (depth > kMaxAdaptiveDepth)
                throw UnboundedRegion("estimate_dark_area: dark region keeps growing");
        }
    }

    const double x0 = static_cast<double>(scene.n);
    const double x1 = scene.n + 1.0 + depth;
    const double width = x1 - x0;
    const double area = width * 2.0 * kRectHalfHeight;

    // Fixed chunking: chunk c draws its own substream of (seed, c), so the
    // counts do not depend on how many threads consume the chunks.
    std::vector<long long> chunk_dark(kChunks, 0);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int c = next.fetch_add(1);
            if (c >= kChunks) return;
            const long long count = samples / kChunks + (c < samples % kChunks ? 1 : 0);
            Xoshiro256pp rng = Xoshiro256pp::for_stream(seed, static_cast<std::uint64_t>(c));
            long long dark = 0;
            for (long long s = 0; s < count; ++s) {
                const Point p{x0 + width * rng.next_double(),
                              -kRectHalfHeight + 2.0 * kRectHalfHeight * rng.next_double()};
                if (caster.inside_any_body(p)) continue;
                if (!caster.lit(p)) ++dark;
            }
            chunk_dark[static_cast<size_t>(c)] = dark;
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = std::min<unsigned>(hw, kChunks);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    long long dark_total = 0;
    for (const long long d : chunk_dark) dark_total += d;

    const double frac = static_cast<double>(dark_total) / static_cast<double>(samples);
    AreaEstimate est;
    est.mean = area * frac;
    est.std_error = area * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    return est;
}

bool probe_unbounded(const Scene& scene, Variant variant, const OracleConfig& cfg) {
    validate(cfg);
    std::vector<double> probes = cfg.probe_distances;
    if (probes.empty())
        probes = {scene.n + 10.0, scene.n + 100.0, scene.n + 1000.0};
    for (const double d : probes)
        if (is_illuminated(scene, variant, {d, 0.0}, cfg)) return false;
    return true;
}

}  // namespace lighthouse::oracle
