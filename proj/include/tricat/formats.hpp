#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tricat/catalan.hpp"
#include "tricat/natural.hpp"

namespace tricat::formats {

enum class TriangleMethod { direct, recurrence, both };

/// s-Pascal rows 0..n_max. CSV: one row per line, comma-separated decimal
/// integers. JSON: {"s": s, "rows": [[...], ...]} with big integers as bare
/// decimal numbers. Table: "n: v v v" lines.
std::string pascal_csv(int s, int n_max);
std::string pascal_json(int s, int n_max);
std::string pascal_table(int s, int n_max);

std::string catalan_csv(int s, int n_max);
std::string catalan_json(int s, int n_max);
std::string catalan_table(int s, int n_max);

/// Triangle rows 0..n_max for the given s. With TriangleMethod::both the
/// two s = 3 constructions are compared first; a disagreement raises
/// std::runtime_error naming the first differing (n, k) and both values.
std::string triangle_csv(int s, int n_max, TriangleMethod method);
std::string triangle_json(int s, int n_max, TriangleMethod method);
std::string triangle_table(int s, int n_max, TriangleMethod method);

/// Rows produced by the chosen method (shared by the emitters above).
std::vector<std::vector<Natural>> triangle_rows_for(int s, int n_max,
                                                    TriangleMethod method);

/// Parses CSV as emitted above; used for round-trip checks.
std::vector<std::vector<Natural>> parse_csv_rows(std::string_view text);

/// Serializes one row of big integers as a JSON array fragment.
std::string json_int_array(const std::vector<Natural>& values);

}  // namespace tricat::formats
