#pragma once

// Text formats. Rationals are always written as strings ("-3/4") so files
// round-trip exactly. Parsing failures raise FormatError naming the location.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxcurve/analysis.hpp"
#include "maxcurve/point.hpp"
#include "maxcurve/poly.hpp"
#include "maxcurve/verify.hpp"

namespace maxcurve::io {

struct NodeSetFile {
    NodeSet nodes;
    int degree = 0;
};

/// {"degree": n, "nodes": [["x","y"], ...]}
std::string nodeset_to_json(const NodeSet& x, int degree);
/// Duplicate nodes are a FormatError ("duplicate node").
NodeSetFile parse_nodeset(std::string_view text);

/// {"factors": [["a","b","c"] | {"degree_bound": n, "coeffs": [...]}, ...],
///  "squarefree": bool}
std::string curve_to_json(const Curve& f);
Curve parse_curve(std::string_view text);

/// {"curves": [curve, ...]}; a bare curve object is read as a one-element list.
std::string curves_to_json(std::span<const Curve> curves);
std::vector<Curve> parse_curves(std::string_view text);

/// {"<node index>": [line, ...], ...}. `node_count` bounds the indices;
/// missing indices are left with no lines.
std::string certificate_to_json(const GcCertificate& cert);
GcCertificate parse_certificate(std::string_view text, std::size_t node_count);

/// One compact JSON object, no trailing newline.
std::string report_to_json(const VerificationReport& report);
/// Fixed-width table, one row per report, plus a totals line.
std::string summary_table(std::span<const VerificationReport> reports);

/// FormatError when the file cannot be read or written.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace maxcurve::io
