#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lighthouse/darkness.hpp"
#include "lighthouse/geom.hpp"
#include "lighthouse/scene.hpp"

namespace lighthouse::oracle {

/// Monte Carlo dark-area estimate behind the target lighthouse.
struct AreaEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long samples = 0;
    std::uint64_t seed = 0;

    bool operator==(const AreaEstimate&) const = default;
};

struct OracleConfig {
    int arc_samples = 720;     // emission points per illuminated arc
    double graze_tol = 1e-9;   // tangent rays are admissible light
    // Axis probe distances; empty means the defaults n+10, n+100, n+1000.
    std::vector<double> probe_distances;
};

/// Ray-cast visibility test, independent of the analytic solvers.
/// Center variant: some center sees p within its illumination cone with the
/// segment clear of every other body. Arc variant: some sampled arc point
/// sees p with the segment clear of every body, its own included.
bool is_illuminated(const Scene& scene, Variant variant, Point p, const OracleConfig& cfg);

/// Rejection sampling over the rectangle behind the target, counting points
/// that are outside all bodies and reached by no light. Deterministic for a
/// fixed seed regardless of worker count. The rectangle depth comes from
/// apex_distance_hint (twice the analytic apex distance) when given, and is
/// otherwise grown until a fully lit margin strip appears.
AreaEstimate estimate_dark_area(const Scene& scene, Variant variant, const OracleConfig& cfg,
                                long long samples, std::uint64_t seed,
                                std::optional<double> apex_distance_hint = std::nullopt);

/// True iff the axis behind the target is dark at every probe distance.
bool probe_unbounded(const Scene& scene, Variant variant, const OracleConfig& cfg);

}  // namespace lighthouse::oracle
