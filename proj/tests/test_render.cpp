#include <doctest.h>

#include <string>
#include <vector>

#include "lighthouse/arc.hpp"
#include "lighthouse/center.hpp"
#include "lighthouse/render.hpp"

using namespace lighthouse;

namespace {

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

/// Minimal XML well-formedness check: prolog, balanced tags, quoted
/// attribute values, one root element.
bool xml_well_formed(const std::string& doc) {
    size_t pos = doc.find('<');
    if (pos == std::string::npos) return false;
    if (doc.compare(pos, 5, "<?xml") == 0) {
        pos = doc.find("?>", pos);
        if (pos == std::string::npos) return false;
        pos += 2;
    }
    std::vector<std::string> stack;
    int roots = 0;
    while ((pos = doc.find('<', pos)) != std::string::npos) {
        const size_t end = doc.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = doc.substr(pos + 1, end - pos - 1);
        size_t quotes = 0;
        for (const char ch : tag) quotes += ch == '"';
        if (quotes % 2 != 0) return false;  // attribute values must close
        if (tag.empty()) return false;
        if (tag[0] == '/') {
            if (stack.empty()) return false;
            const std::string name = tag.substr(1);
            if (stack.back() != name) return false;
            stack.pop_back();
            if (stack.empty()) ++roots;
        } else {
            const bool self_closing = tag.back() == '/';
            std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
            if (!self_closing) {
                stack.push_back(name);
            } else if (stack.empty()) {
                ++roots;
            }
        }
        pos = end + 1;
    }
    return stack.empty() && roots == 1;
}

GoverningRay arc_ray(int n) {
    const auto [k, sol] = arc::find_illuminator(build_scene(n));
    (void)k;
    return {sol.emission, sol.tangency, sol.apex};
}

}  // namespace

TEST_CASE("render structure") {
    SUBCASE("n = 3, center variant, bodies only") {
        RenderOptions opts;
        opts.variant = Variant::center;
        const std::string svg = render_scene(build_scene(3), opts);
        CHECK(count_occurrences(svg, "<circle ") == 3);
        CHECK(xml_well_formed(svg));
    }
    SUBCASE("n = 1: one circle, no rays, no dark region") {
        RenderOptions opts;
        const std::string svg = render_scene(build_scene(1), opts);
        CHECK(count_occurrences(svg, "<circle ") == 1);
        CHECK(count_occurrences(svg, "<line ") == 0);
        CHECK(svg.find("#7a7a7a") == std::string::npos);
        CHECK(xml_well_formed(svg));
    }
    SUBCASE("n = 4 arc with a solution: circles, two rays, apex marker") {
        RenderOptions opts;
        opts.variant = Variant::arc;
        const std::string svg = render_scene(build_scene(4), opts, arc_ray(4));
        CHECK(count_occurrences(svg, "<circle ") == 4);
        CHECK(count_occurrences(svg, "<line ") == 2);
        CHECK(count_occurrences(svg, "<rect ") == 2);  // background and apex marker
        CHECK(svg.find("#7a7a7a") != std::string::npos);
        CHECK(xml_well_formed(svg));
    }
}

TEST_CASE("rendering is deterministic") {
    RenderOptions opts;
    opts.variant = Variant::arc;
    const Scene s = build_scene(5);
    const auto ray = arc_ray(5);
    CHECK(render_scene(s, opts, ray) == render_scene(s, opts, ray));
}

TEST_CASE("options are validated") {
    RenderOptions opts;
    opts.width_px = 32;
    CHECK_THROWS_AS(render_scene(build_scene(3), opts), Error);
}

TEST_CASE("ray toggles") {
    RenderOptions opts;
    opts.variant = Variant::center;
    opts.show_rays = false;
    opts.show_dark_region = false;
    const center::GoverningTangent g = center::governing_tangent(5);
    const std::string svg =
        render_scene(build_scene(5), opts, GoverningRay{g.source_center, g.tangency, g.apex});
    CHECK(count_occurrences(svg, "<line ") == 0);
    CHECK(svg.find("#7a7a7a") == std::string::npos);
    CHECK(xml_well_formed(svg));
}
