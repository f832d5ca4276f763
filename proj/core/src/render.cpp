#include "lighthouse/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>

namespace lighthouse {

namespace {

constexpr double kPi = std::numbers::pi;

struct Frame {
    double scale = 1.0;
    double min_x = 0.0, max_y = 0.0;
    double pad = 0.0;

    double sx(double wx) const { return pad + (wx - min_x) * scale; }
    double sy(double wy) const { return pad + (max_y - wy) * scale; }
    double sx(Point p) const { return sx(p.x); }
    double sy(Point p) const { return sy(p.y); }
};

void appendf(std::string& out, const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    out += buf;
}

}  // namespace

std::string render_scene(const Scene& scene, const RenderOptions& opts,
                         const std::optional<GoverningRay>& ray) {
    if (opts.width_px < 64 || opts.height_px < 64)
        throw Error("render_scene: canvas must be at least 64x64");

    // world bounds: all bodies, the origin, and the apex when present
    double min_x = -0.5, max_x = 0.5, min_y = -0.5, max_y = 0.5;
    for (const Point& c : scene.centers) {
        min_x = std::min(min_x, c.x - scene.radius);
        max_x = std::max(max_x, c.x + scene.radius);
        min_y = std::min(min_y, c.y - scene.radius);
        max_y = std::max(max_y, c.y + scene.radius);
    }
    if (ray) {
        min_x = std::min(min_x, ray->apex.x);
        max_x = std::max(max_x, ray->apex.x);
    }
    const double span_x = max_x - min_x, span_y = max_y - min_y;
    min_x -= 0.05 * span_x;
    max_x += 0.05 * span_x;
    min_y -= 0.05 * span_y;
    max_y += 0.05 * span_y;

    Frame fr;
    fr.pad = 4.0;
    fr.scale = std::min((opts.width_px - 2 * fr.pad) / (max_x - min_x),
                        (opts.height_px - 2 * fr.pad) / (max_y - min_y));
    fr.min_x = min_x;
    fr.max_y = max_y;

    std::string svg;
    svg.reserve(4096);
    appendf(svg,
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
            "width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
            opts.width_px, opts.height_px, opts.width_px, opts.height_px);
    appendf(svg, "<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"#ffffff\"/>\n",
            opts.width_px, opts.height_px);

    const double r_px = scene.radius * fr.scale;

    // bodies: light gray, except n = 1 whose aperture is the full circle
    for (const Point& c : scene.centers) {
        const char* fill = scene.n == 1 ? "#ffffff" : "#d9d9d9";
        appendf(svg,
                "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\" "
                "stroke=\"#404040\" stroke-width=\"1\"/>\n",
                fr.sx(c), fr.sy(c), r_px, fill);
    }

    // white illumination sectors (arcs through the facing direction)
    if (scene.n >= 2) {
        const double half = scene.alpha / 2.0;
        for (const Point& c : scene.centers) {
            const double face = std::atan2(-c.y, -c.x);
            const Point p1{c.x + scene.radius * std::cos(face - half),
                           c.y + scene.radius * std::sin(face - half)};
            const Point p2{c.x + scene.radius * std::cos(face + half),
                           c.y + scene.radius * std::sin(face + half)};
            const int large = scene.alpha > kPi ? 1 : 0;
            appendf(svg,
                    "<path d=\"M %.2f %.2f L %.2f %.2f A %.2f %.2f 0 %d 0 %.2f %.2f Z\" "
                    "fill=\"#ffffff\" stroke=\"#404040\" stroke-width=\"0.5\"/>\n",
                    fr.sx(c), fr.sy(c), fr.sx(p1), fr.sy(p1), r_px, r_px, large,
                    fr.sx(p2), fr.sy(p2));
        }
    }

    if (ray && opts.show_dark_region) {
        // doubled triangle-minus-sector: tangency -> apex -> mirrored
        // tangency -> circle arc through the back point
        const Point a_up{ray->tangency.x, std::abs(ray->tangency.y)};
        const Point a_dn{ray->tangency.x, -std::abs(ray->tangency.y)};
        appendf(svg,
                "<path d=\"M %.2f %.2f L %.2f %.2f L %.2f %.2f A %.2f %.2f 0 0 0 %.2f %.2f Z\" "
                "fill=\"#7a7a7a\" stroke=\"none\"/>\n",
                fr.sx(a_up), fr.sy(a_up), fr.sx(ray->apex), fr.sy(ray->apex),
                fr.sx(a_dn), fr.sy(a_dn), r_px, r_px, fr.sx(a_up), fr.sy(a_up));
    }

    if (ray && opts.show_rays) {
        const Point e = ray->emission;
        const Point b = ray->apex;
        appendf(svg,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"#b03030\" stroke-width=\"1.2\"/>\n",
                fr.sx(e), fr.sy(e), fr.sx(b), fr.sy(b));
        appendf(svg,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"#b03030\" stroke-width=\"1.2\"/>\n",
                fr.sx(e.x), fr.sy(-e.y), fr.sx(b), fr.sy(b));
        appendf(svg,
                "<rect x=\"%.2f\" y=\"%.2f\" width=\"6\" height=\"6\" fill=\"#000000\"/>\n",
                fr.sx(b) - 3.0, fr.sy(b) - 3.0);
    }

    // placement center marker
    appendf(svg,
            "<path d=\"M %.2f %.2f h 8 M %.2f %.2f v 8\" stroke=\"#404040\" "
            "stroke-width=\"1\"/>\n",
            fr.sx(0.0) - 4.0, fr.sy(0.0), fr.sx(0.0), fr.sy(0.0) - 4.0);

    svg += "</svg>\n";
    return svg;
}

}  // namespace lighthouse
