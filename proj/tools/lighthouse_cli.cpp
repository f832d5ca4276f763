#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lighthouse/arc.hpp"
#include "lighthouse/center.hpp"
#include "lighthouse/error.hpp"
#include "lighthouse/render.hpp"
#include "lighthouse/report.hpp"

namespace {

using namespace lighthouse;

Variant parse_variant(const std::string& name) {
    if (name == "center") return Variant::center;
    if (name == "arc") return Variant::arc;
    throw Error("unknown variant: " + name);
}

int cmd_table(int max_n, const std::string& variant, Format format) {
    const bool with_center = variant == "center" || variant == "both";
    const bool with_arc = variant == "arc" || variant == "both";
    std::cout << format_table(table_reports(max_n, with_center, with_arc), format);
    return 0;
}

int cmd_compute(int n, const std::string& variant, Format format) {
    std::cout << format_case(build_case_report(n, parse_variant(variant)), format);
    return 0;
}

int cmd_verify(int n, const std::string& variant, long long samples, std::uint64_t seed,
               Format format) {
    const VerifyReport vr = verify_case(n, parse_variant(variant), samples, seed);
    std::cout << format_verify(vr, format);
    return vr.pass ? 0 : 1;
}

int cmd_render(int n, const std::string& variant, const std::string& out_path, int width,
               int height, bool no_rays, bool no_dark) {
    const Variant v = parse_variant(variant);
    RenderOptions opts;
    opts.width_px = width;
    opts.height_px = height;
    opts.show_rays = !no_rays;
    opts.show_dark_region = !no_dark;
    opts.variant = v;

    const Scene scene = build_scene(n);
    std::optional<GoverningRay> ray;
    if (v == Variant::center) {
        if (n > 1 && n % 2 == 1) {
            const center::GoverningTangent g = center::governing_tangent(n);
            ray = GoverningRay{g.source_center, g.tangency, g.apex};
        }
    } else if (n >= 2) {
        try {
            const auto [k, sol] = arc::find_illuminator(scene);
            (void)k;
            ray = GoverningRay{sol.emission, sol.tangency, sol.apex};
        } catch (const NoIlluminator&) {
            // unbounded: draw bodies and sectors only
        }
    }

    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error("render: cannot open output file: " + out_path);
    file << render_scene(scene, opts, ray);
    if (!file) throw Error("render: write failed: " + out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_scan(const std::string& kind, int max_n, Format format) {
    if (kind == "illuminator") {
        const auto rows = arc::illuminator_scan(max_n);
        if (format == Format::json) {
            std::string out = "[\n";
            char buf[128];
            for (size_t i = 0; i < rows.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "  {\"n\": %d, \"k\": %d, \"x\": %.12g}%s\n",
                              rows[i].n, rows[i].k, rows[i].x,
                              i + 1 < rows.size() ? "," : "");
                out += buf;
            }
            std::cout << out << "]\n";
        } else {
            const char* sep = format == Format::csv ? "," : "  ";
            if (format == Format::csv)
                std::cout << "n,k,x\n";
            else
                std::cout << "     n   k  x\n";
            char buf[128];
            for (const auto& row : rows) {
                if (format == Format::csv)
                    std::snprintf(buf, sizeof(buf), "%d%s%d%s%s\n", row.n, sep, row.k, sep,
                                  fmt4(row.x).c_str());
                else
                    std::snprintf(buf, sizeof(buf), "%6d%s%2d%s%s\n", row.n, sep, row.k, sep,
                                  fmt4(row.x).c_str());
                std::cout << buf;
            }
        }
        return 0;
    }
    if (kind == "growth") {
        const auto rows = center::odd_growth_scan(max_n);
        if (format == Format::json) {
            std::string out = "[\n";
            char buf[128];
            for (size_t i = 0; i < rows.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "  {\"n\": %d, \"dark_total\": %.12g}%s\n",
                              rows[i].first, rows[i].second,
                              i + 1 < rows.size() ? "," : "");
                out += buf;
            }
            std::cout << out << "]\n";
        } else {
            std::cout << (format == Format::csv ? "n,dark_total\n" : "     n  dark_total\n");
            char buf[128];
            for (const auto& [n, total] : rows) {
                if (format == Format::csv)
                    std::snprintf(buf, sizeof(buf), "%d,%s\n", n, fmt4(total).c_str());
                else
                    std::snprintf(buf, sizeof(buf), "%6d  %s\n", n, fmt4(total).c_str());
                std::cout << buf;
            }
        }
        return 0;
    }
    throw Error("unknown scan kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dark-area calculator for the n-lighthouse illumination configuration"};
    app.require_subcommand(1);

    std::string variant = "both";
    std::string format_name = "text";
    std::string out_path = "scene.svg";
    std::string scan_kind;
    int n = 3;
    int max_n = 5;
    int width = 800, height = 600;
    bool no_rays = false, no_dark = false;
    long long samples = 1000000;
    std::uint64_t seed = 42;

    auto* table = app.add_subcommand("table", "Reproduce the findings table for n = 1..max-n");
    table->add_option("--max-n", max_n, "largest n")->check(CLI::PositiveNumber);
    table->add_option("--variant", variant, "center, arc or both")
        ->check(CLI::IsMember({"center", "arc", "both"}));
    table->add_option("--format", format_name)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* compute = app.add_subcommand("compute", "Analytic report for a single case");
    compute->add_option("--n", n, "number of lighthouses")->check(CLI::PositiveNumber);
    compute->add_option("--variant", variant, "center or arc")
        ->check(CLI::IsMember({"center", "arc"}))
        ->default_val("center");
    compute->add_option("--format", format_name)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Check the analytic value against the Monte Carlo oracle");
    verify->add_option("--n", n)->check(CLI::PositiveNumber);
    verify->add_option("--variant", variant)->check(CLI::IsMember({"center", "arc"}))
        ->default_val("center");
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed)->envname("LIGHTHOUSE_SEED");
    verify->add_option("--format", format_name)->check(CLI::IsMember({"text", "json"}));

    auto* render = app.add_subcommand("render", "Write a schematic SVG of a scene");
    render->add_option("--n", n)->check(CLI::PositiveNumber);
    render->add_option("--variant", variant)->check(CLI::IsMember({"center", "arc"}))
        ->default_val("center");
    render->add_option("--out", out_path, "output SVG path");
    render->add_option("--width", width)->check(CLI::Range(64, 8192));
    render->add_option("--height", height)->check(CLI::Range(64, 8192));
    render->add_flag("--no-rays", no_rays, "omit the governing rays");
    render->add_flag("--no-dark", no_dark, "omit the dark region");

    auto* scan = app.add_subcommand("scan", "Empirical scans: illuminator k(n) or growth of D(n)");
    scan->add_option("kind", scan_kind, "illuminator or growth")
        ->required()
        ->check(CLI::IsMember({"illuminator", "growth"}));
    scan->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    scan->add_option("--format", format_name)->check(CLI::IsMember({"text", "csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        const lighthouse::Format format = lighthouse::parse_format(format_name);
        if (table->parsed()) return cmd_table(max_n, variant, format);
        if (compute->parsed()) return cmd_compute(n, variant, format);
        if (verify->parsed()) return cmd_verify(n, variant, samples, seed, format);
        if (render->parsed()) return cmd_render(n, variant, out_path, width, height, no_rays, no_dark);
        if (scan->parsed()) return cmd_scan(scan_kind, max_n, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
