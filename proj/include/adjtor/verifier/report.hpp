#pragma once

#include "adjtor/verifier/verify.hpp"

#include <json.hpp>

#include <string>

namespace adjtor {

/// {"re": ..., "im": ...} with both parts rounded to double.
nlohmann::json complex_json(const Complex& z);

nlohmann::json khovanskii_json(const KhovanskiiReport& r);

/// The full report with keys preset, slope, z, x, precision_bits, components,
/// total_sum, vanishing_metric, verdict, khovanskii, index_values, elapsed_ms.
nlohmann::json report_json(const VerificationReport& r);

/// Writes the report to path (pretty-printed, trailing newline).
void write_report(const VerificationReport& r, const std::string& path);

/// Human-readable summary.  With list_points every point's torsion is shown.
std::string render_text(const VerificationReport& r, bool list_points);

std::string render_khovanskii(const KhovanskiiReport& r);

}  // namespace adjtor
