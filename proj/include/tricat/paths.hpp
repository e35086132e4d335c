#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "tricat/natural.hpp"

namespace tricat {

/// The six step kinds, in the canonical (enumeration) order used for
/// lexicographic path listings.
enum class Step : std::uint8_t {
    U,    // (0, 1)
    D,    // (0, -1)
    NE1,  // (1, 1)
    SE1,  // (1, -1)
    NE2,  // (1, 2)
    SE2,  // (1, -2)
};

const char* step_name(Step s);
int step_dx(Step s);
int step_dy(Step s);
bool step_is_vertical(Step s);

struct Point {
    long long x = 0;
    long long y = 0;
    bool operator==(const Point&) const = default;
};

/// A lattice walk starting at (0,0). May be invalid; validity is a separate
/// judgement (is_valid).
struct Path {
    std::vector<Step> steps;

    Point endpoint() const;
    bool operator==(const Path&) const = default;
};

/// How runs of consecutive vertical steps are restricted.
enum class VerticalPolicy : std::uint8_t {
    /// Runs of at most two verticals, both in the same direction.
    same_direction_runs,
    /// Up/down may alternate, but any third consecutive vertical is illegal.
    mixed_pairs_bounded,
    /// Only three consecutive verticals of the same direction are illegal.
    mixed_pairs_monotone_triples,
    /// No two consecutive verticals at all.
    no_vertical_pairs,
};

/// One concrete reading of the walk constraints. The three booleans choose
/// whether each height-conditioned clause keys on the diagonal step's
/// departure point (true) or its arrival point (false):
///   * ne2 grounded:   NE2 may not leave (arrive at) a point with y = 0;
///   * ne1 then D,D:   two downs may not immediately follow an NE1 that
///                     left (arrived at) height 1;
///   * se1 then D:     a down may not immediately follow an SE1 that left
///                     (arrived at) height 2.
struct RuleConfig {
    bool ne2_ground_at_departure = true;
    bool ne1_dd_at_departure = true;
    bool se1_d_at_departure = true;
    VerticalPolicy vertical_policy = VerticalPolicy::same_direction_runs;

    bool operator==(const RuleConfig&) const = default;
};

/// The frozen reading: all three height clauses key on departure points and
/// vertical runs are same-direction with length at most two. This is the
/// unique configuration that calibrate_rules leaves standing.
inline RuleConfig canonical_rules() { return RuleConfig{}; }

std::string describe(const RuleConfig& rules);

/// Which constraint a step violated.
enum class Constraint : std::uint8_t {
    none,
    leading_step,        // first step must be NE1
    quarter_plane,       // x >= 0, y >= 0 at every prefix
    vertical_run,        // illegal run of consecutive verticals
    after_long_diagonal, // no D right after SE2, no U right after NE2
    height_rule,         // one of the three height-conditioned clauses
};

const char* constraint_name(Constraint c);

struct ValidationResult {
    bool ok = true;
    Constraint violated = Constraint::none;
    std::size_t step_index = 0;  // 0-based index of the offending step
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Checks every prefix of the walk against `rules`; reports the first
/// violated constraint and the index of the step that caused it.
ValidationResult is_valid(const Path& path,
                          const RuleConfig& rules = canonical_rules());

/// Number of valid walks from (0,0) to (n,k), by dynamic programming over
/// (column, height, last horizontal step, trailing vertical pair). Returns
/// 0 for k < 0 or k > 3n. Policies with unbounded vertical runs are
/// rejected (they admit infinitely many walks).
Natural count_paths(int n, long long k,
                    const RuleConfig& rules = canonical_rules());

inline constexpr int kDefaultEnumerationBound = 6;

/// All valid walks to (n,k) in lexicographic step order, truncated at
/// `limit`. Refuses n beyond `exhaustive_bound` with a resource_error.
std::vector<Path> enumerate_paths(
    int n, long long k,
    std::size_t limit = std::numeric_limits<std::size_t>::max(),
    int exhaustive_bound = kDefaultEnumerationBound,
    const RuleConfig& rules = canonical_rules());

/// Compact text form, e.g. "NE1 U D SE1"; empty path -> empty string.
/// parse_path inverts it exactly.
std::string to_step_string(const Path& path);

/// ASCII grid: rows are heights (top = max y), columns are x positions.
/// 'S' start, 'E' end, '*' intermediate visits, '.' untouched.
std::string render_ascii(const Path& path);

/// Parses whitespace-separated step tokens. Unknown tokens raise
/// parse_error with the 1-based token position. Validity is not enforced.
Path parse_path(std::string_view text);

struct CalibrationResult {
    enum class Status { unique, none_matching, ambiguous };
    Status status = Status::none_matching;
    std::vector<RuleConfig> survivors;
    int n_max = 0;
};

/// Enumerates all 32 readings of the constraints, counts walks under each
/// by brute-force DFS, and keeps those whose counts match the triangle
/// rows (by differences) for every endpoint with x <= n_max. Exactly one
/// reading should survive; zero and several are distinct reportable
/// outcomes.
CalibrationResult calibrate_rules(int n_max = 4);

/// All 32 readings in enumeration order (exposed for tests).
std::vector<RuleConfig> all_rule_configs();

}  // namespace tricat
