#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricat/natural.hpp"

namespace tricat {

/// An OEIS b-file: "index value" lines with strictly increasing indices.
struct BFile {
    std::string id;  // e.g. "A008287"; informational
    std::vector<std::pair<long long, Natural>> entries;
};

/// Parses b-file text. '#'-prefixed lines and blank lines are ignored.
/// Malformed lines and non-monotone indices raise parse_error with the
/// 1-based line number.
BFile parse_bfile(std::istream& in, std::string id = "");
BFile parse_bfile_text(const std::string& text, std::string id = "");
BFile load_bfile(const std::filesystem::path& path);

struct BFileCheck {
    bool pass = true;
    long long compared = 0;  // number of positions actually compared
    std::optional<long long> mismatch_index;
    Natural expected;  // value from the b-file at the first mismatch
    Natural actual;    // flattened triangle value there
};

/// Flattens s-Pascal rows 0..n_max in row-major order and compares the
/// sequence position-by-position against the b-file entries (entry index ==
/// flattened position). Entries beyond the flattened prefix, or a b-file
/// shorter than the prefix, are not mismatches.
BFileCheck compare_flattened_pascal(const BFile& bfile, int s, int n_max);

}  // namespace tricat
