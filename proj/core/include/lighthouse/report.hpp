#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lighthouse/darkness.hpp"
#include "lighthouse/oracle.hpp"

namespace lighthouse {

enum class Format { text, csv, json };

Format parse_format(const std::string& name);

/// One table row: the full analytic result for (n, variant), optionally with
/// the Monte Carlo cross-check attached.
struct CaseReport {
    int n = 0;
    Variant variant = Variant::center;
    DarknessResult::Kind classification = DarknessResult::Kind::zero;
    std::optional<double> apex_x;
    std::optional<double> dark_single;
    std::optional<double> dark_total;
    std::optional<int> illuminator_k;
    std::optional<oracle::AreaEstimate> oracle_estimate;

    bool operator==(const CaseReport&) const = default;
};

CaseReport build_case_report(int n, Variant variant);

std::string to_json(const CaseReport& r);
CaseReport case_report_from_json(const std::string& text);

/// Rows for n = 1..max_n; with_arc/with_center select the columns.
std::vector<CaseReport> table_reports(int max_n, bool with_center, bool with_arc);

/// The findings table. Numeric cells carry 4 decimals (half-up); unbounded
/// prints as "inf" in text and csv, "unbounded" in json.
std::string format_table(const std::vector<CaseReport>& rows, Format format);

std::string format_case(const CaseReport& r, Format format);

/// Analytic value vs Monte Carlo estimate for one finite case.
struct VerifyReport {
    CaseReport analytic;
    oracle::AreaEstimate estimate;
    double abs_error = 0.0;
    double tolerance = 0.0;  // max(3 * std_error, 2% of analytic d(n))
    bool pass = false;
};

VerifyReport verify_case(int n, Variant variant, long long samples, std::uint64_t seed,
                         const oracle::OracleConfig& cfg = {});

std::string format_verify(const VerifyReport& r, Format format);

/// Decimal rounding, half away from zero, to 4 places.
double round_half_up4(double v);

/// v rendered with 4 decimals after half-up rounding.
std::string fmt4(double v);

}  // namespace lighthouse
