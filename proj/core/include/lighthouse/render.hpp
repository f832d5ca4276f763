#pragma once

#include <optional>
#include <string>

#include "lighthouse/darkness.hpp"
#include "lighthouse/geom.hpp"
#include "lighthouse/scene.hpp"

namespace lighthouse {

struct RenderOptions {
    int width_px = 800;
    int height_px = 600;
    bool show_rays = true;
    bool show_dark_region = true;
    Variant variant = Variant::center;
};

/// The governing ray in the form the renderer needs: one extreme tangent and
/// its apex; the mirrored twin is implied by the axis symmetry.
struct GoverningRay {
    Point emission;
    Point tangency;
    Point apex;
};

/// Schematic SVG of the scene in the figures' three-shade style: light gray
/// bodies with white illumination sectors, the governing tangent pair, and
/// the dark region as the doubled triangle-minus-sector behind the target.
/// Byte-identical output for identical inputs.
std::string render_scene(const Scene& scene, const RenderOptions& opts,
                         const std::optional<GoverningRay>& ray = std::nullopt);

}  // namespace lighthouse
