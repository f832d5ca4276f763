#include "lighthouse/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "lighthouse/arc.hpp"
#include "lighthouse/center.hpp"

namespace lighthouse {

namespace {

using nlohmann::json;

const char* variant_name(Variant v) { return v == Variant::center ? "center" : "arc"; }

const char* kind_name(DarknessResult::Kind k) {
    switch (k) {
        case DarknessResult::Kind::zero: return "zero";
        case DarknessResult::Kind::finite: return "finite";
        case DarknessResult::Kind::unbounded: return "unbounded";
    }
    return "unknown";
}

DarknessResult::Kind kind_from_name(const std::string& s) {
    if (s == "zero") return DarknessResult::Kind::zero;
    if (s == "finite") return DarknessResult::Kind::finite;
    if (s == "unbounded") return DarknessResult::Kind::unbounded;
    throw Error("unknown classification: " + s);
}

json case_to_json_obj(const CaseReport& r) {
    json j;
    j["n"] = r.n;
    j["variant"] = variant_name(r.variant);
    j["classification"] = kind_name(r.classification);
    if (r.apex_x) j["apex_x"] = *r.apex_x;
    if (r.dark_single) j["dark_single"] = *r.dark_single;
    if (r.dark_total) j["dark_total"] = *r.dark_total;
    if (r.illuminator_k) j["illuminator_k"] = *r.illuminator_k;
    if (r.oracle_estimate) {
        j["oracle"] = {{"mean", r.oracle_estimate->mean},
                       {"std_error", r.oracle_estimate->std_error},
                       {"samples", r.oracle_estimate->samples},
                       {"seed", r.oracle_estimate->seed}};
    }
    return j;
}

CaseReport case_from_json_obj(const json& j) {
    CaseReport r;
    r.n = j.at("n").get<int>();
    const std::string v = j.at("variant").get<std::string>();
    if (v != "center" && v != "arc") throw Error("unknown variant: " + v);
    r.variant = v == "center" ? Variant::center : Variant::arc;
    r.classification = kind_from_name(j.at("classification").get<std::string>());
    if (j.contains("apex_x")) r.apex_x = j.at("apex_x").get<double>();
    if (j.contains("dark_single")) r.dark_single = j.at("dark_single").get<double>();
    if (j.contains("dark_total")) r.dark_total = j.at("dark_total").get<double>();
    if (j.contains("illuminator_k")) r.illuminator_k = j.at("illuminator_k").get<int>();
    if (j.contains("oracle")) {
        const json& o = j.at("oracle");
        oracle::AreaEstimate est;
        est.mean = o.at("mean").get<double>();
        est.std_error = o.at("std_error").get<double>();
        est.samples = o.at("samples").get<long long>();
        est.seed = o.at("seed").get<std::uint64_t>();
        r.oracle_estimate = est;
    }
    return r;
}

std::string total_cell(const CaseReport& r, Format format) {
    if (r.classification == DarknessResult::Kind::unbounded)
        return format == Format::json ? "unbounded" : "inf";
    return fmt4(r.dark_total.value_or(0.0));
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw Error("unknown format: " + name);
}

double round_half_up4(double v) {
    const double scaled = std::abs(v) * 1e4;
    const double rounded = std::floor(scaled + 0.5) / 1e4;
    return v < 0.0 ? -rounded : rounded;
}

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", round_half_up4(v));
    return buf;
}

CaseReport build_case_report(int n, Variant variant) {
    CaseReport r;
    r.n = n;
    r.variant = variant;
    if (variant == Variant::center) {
        const DarknessResult total = center::total_dark_area(n);
        r.classification = total.kind;
        if (total.is_finite()) {
            r.apex_x = center::apex_x_closed(n);
            r.dark_single = dark_single(*r.apex_x);
            r.dark_total = total.value;
        }
    } else {
        const DarknessResult total = arc::total_dark_area(n);
        r.classification = total.kind;
        if (total.is_finite()) {
            const auto [k, sol] = arc::find_illuminator(build_scene(n));
            r.apex_x = sol.x;
            r.dark_single = dark_single(sol.x);
            r.dark_total = total.value;
            r.illuminator_k = k;
        }
    }
    if (r.classification == DarknessResult::Kind::zero) {
        r.dark_single = 0.0;
        r.dark_total = 0.0;
    }
    return r;
}

std::string to_json(const CaseReport& r) { return case_to_json_obj(r).dump(2); }

CaseReport case_report_from_json(const std::string& text) {
    return case_from_json_obj(json::parse(text));
}

std::vector<CaseReport> table_reports(int max_n, bool with_center, bool with_arc) {
    if (max_n < 1) throw InvalidN("table_reports: max_n must be >= 1");
    std::vector<CaseReport> rows;
    for (int n = 1; n <= max_n; ++n) {
        if (with_center) rows.push_back(build_case_report(n, Variant::center));
        if (with_arc) rows.push_back(build_case_report(n, Variant::arc));
    }
    return rows;
}

std::string format_table(const std::vector<CaseReport>& rows, Format format) {
    bool has_center = false, has_arc = false;
    int max_n = 0;
    for (const CaseReport& r : rows) {
        has_center |= r.variant == Variant::center;
        has_arc |= r.variant == Variant::arc;
        max_n = std::max(max_n, r.n);
    }

    auto cell = [&](int n, Variant v) -> std::string {
        for (const CaseReport& r : rows)
            if (r.n == n && r.variant == v) return total_cell(r, format);
        return "";
    };

    if (format == Format::json) {
        json arr = json::array();
        for (const CaseReport& r : rows) arr.push_back(case_to_json_obj(r));
        return arr.dump(2) + "\n";
    }

    std::string out;
    if (format == Format::csv) {
        out += "n";
        if (has_center) out += ",center";
        if (has_arc) out += ",arc";
        out += "\n";
        for (int n = 1; n <= max_n; ++n) {
            out += std::to_string(n);
            if (has_center) out += "," + cell(n, Variant::center);
            if (has_arc) out += "," + cell(n, Variant::arc);
            out += "\n";
        }
        return out;
    }

    char buf[128];
    std::snprintf(buf, sizeof(buf), "%6s", "n");
    out += buf;
    if (has_center) {
        std::snprintf(buf, sizeof(buf), "%14s", "center");
        out += buf;
    }
    if (has_arc) {
        std::snprintf(buf, sizeof(buf), "%14s", "arc");
        out += buf;
    }
    out += "\n";
    for (int n = 1; n <= max_n; ++n) {
        std::snprintf(buf, sizeof(buf), "%6d", n);
        out += buf;
        if (has_center) {
            std::snprintf(buf, sizeof(buf), "%14s", cell(n, Variant::center).c_str());
            out += buf;
        }
        if (has_arc) {
            std::snprintf(buf, sizeof(buf), "%14s", cell(n, Variant::arc).c_str());
            out += buf;
        }
        out += "\n";
    }
    return out;
}

std::string format_case(const CaseReport& r, Format format) {
    if (format == Format::json) return to_json(r) + "\n";
    if (format == Format::csv) {
        std::string out = "n,variant,classification,apex_x,dark_single,dark_total,illuminator_k\n";
        out += std::to_string(r.n);
        out += std::string(",") + variant_name(r.variant);
        out += std::string(",") + kind_name(r.classification);
        const bool unbounded = r.classification == DarknessResult::Kind::unbounded;
        out += "," + (r.apex_x ? fmt4(*r.apex_x) : std::string());
        out += "," + (unbounded ? std::string("inf")
                                : r.dark_single ? fmt4(*r.dark_single) : std::string());
        out += "," + (unbounded ? std::string("inf")
                                : r.dark_total ? fmt4(*r.dark_total) : std::string());
        out += "," + (r.illuminator_k ? std::to_string(*r.illuminator_k) : std::string());
        out += "\n";
        return out;
    }
    std::string out;
    out += "n:              " + std::to_string(r.n) + "\n";
    out += std::string("variant:        ") + variant_name(r.variant) + "\n";
    out += std::string("classification: ") + kind_name(r.classification) + "\n";
    if (r.apex_x) out += "apex x:         " + fmt4(*r.apex_x) + "\n";
    if (r.dark_single) out += "dark single:    " + fmt4(*r.dark_single) + "\n";
    if (r.dark_total) out += "dark total:     " + fmt4(*r.dark_total) + "\n";
    if (r.illuminator_k) out += "illuminator k:  " + std::to_string(*r.illuminator_k) + "\n";
    if (r.oracle_estimate) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "oracle:         %.6f +- %.6f (%lld samples, seed %llu)\n",
                      r.oracle_estimate->mean, r.oracle_estimate->std_error,
                      r.oracle_estimate->samples,
                      static_cast<unsigned long long>(r.oracle_estimate->seed));
        out += buf;
    }
    return out;
}

VerifyReport verify_case(int n, Variant variant, long long samples, std::uint64_t seed,
                         const oracle::OracleConfig& cfg) {
    VerifyReport vr;
    vr.analytic = build_case_report(n, variant);
    if (vr.analytic.classification != DarknessResult::Kind::finite)
        throw Error("verify: dark area is not finite for this case");

    const double apex_distance = std::sqrt(1.0 + *vr.analytic.apex_x * *vr.analytic.apex_x);
    const Scene scene = build_scene(n);
    vr.estimate = oracle::estimate_dark_area(scene, variant, cfg, samples, seed, apex_distance);
    vr.analytic.oracle_estimate = vr.estimate;

    vr.abs_error = std::abs(vr.estimate.mean - *vr.analytic.dark_single);
    vr.tolerance = std::max(3.0 * vr.estimate.std_error, 0.02 * *vr.analytic.dark_single);
    vr.pass = vr.abs_error <= vr.tolerance;
    return vr;
}

std::string format_verify(const VerifyReport& r, Format format) {
    if (format == Format::json) {
        json j;
        j["analytic"] = case_to_json_obj(r.analytic);
        j["analytic"].erase("oracle");
        j["oracle"] = {{"mean", r.estimate.mean},
                       {"std_error", r.estimate.std_error},
                       {"samples", r.estimate.samples},
                       {"seed", r.estimate.seed}};
        j["abs_error"] = r.abs_error;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        return j.dump(2) + "\n";
    }
    char buf[256];
    std::string out;
    out += format_case(r.analytic, Format::text);
    std::snprintf(buf, sizeof(buf), "abs error:      %.6f\ntolerance:      %.6f\nresult:         %s\n",
                  r.abs_error, r.tolerance, r.pass ? "PASS" : "FAIL");
    out += buf;
    return out;
}

}  // namespace lighthouse
