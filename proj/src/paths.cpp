#include "tricat/paths.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "tricat/catalan.hpp"
#include "tricat/errors.hpp"

namespace tricat {

const char* step_name(Step s) {
    switch (s) {
        case Step::U: return "U";
        case Step::D: return "D";
        case Step::NE1: return "NE1";
        case Step::SE1: return "SE1";
        case Step::NE2: return "NE2";
        case Step::SE2: return "SE2";
    }
    return "?";
}

int step_dx(Step s) { return step_is_vertical(s) ? 0 : 1; }

int step_dy(Step s) {
    switch (s) {
        case Step::U: return 1;
        case Step::D: return -1;
        case Step::NE1: return 1;
        case Step::SE1: return -1;
        case Step::NE2: return 2;
        case Step::SE2: return -2;
    }
    return 0;
}

bool step_is_vertical(Step s) { return s == Step::U || s == Step::D; }

Point Path::endpoint() const {
    Point p;
    for (Step s : steps) {
        p.x += step_dx(s);
        p.y += step_dy(s);
    }
    return p;
}

const char* constraint_name(Constraint c) {
    switch (c) {
        case Constraint::none: return "none";
        case Constraint::leading_step: return "leading step";
        case Constraint::quarter_plane: return "quarter plane";
        case Constraint::vertical_run: return "vertical run";
        case Constraint::after_long_diagonal: return "after long diagonal";
        case Constraint::height_rule: return "height rule";
    }
    return "?";
}

std::string describe(const RuleConfig& rules) {
    std::ostringstream out;
    out << "ne2-ground=" << (rules.ne2_ground_at_departure ? "departure" : "arrival")
        << " ne1-dd=" << (rules.ne1_dd_at_departure ? "departure" : "arrival")
        << " se1-d=" << (rules.se1_d_at_departure ? "departure" : "arrival")
        << " verticals=";
    switch (rules.vertical_policy) {
        case VerticalPolicy::same_direction_runs: out << "same-direction-runs"; break;
        case VerticalPolicy::mixed_pairs_bounded: out << "mixed-pairs-bounded"; break;
        case VerticalPolicy::mixed_pairs_monotone_triples: out << "mixed-pairs-monotone-triples"; break;
        case VerticalPolicy::no_vertical_pairs: out << "no-vertical-pairs"; break;
    }
    return out.str();
}

namespace {

// Incremental walk context: enough memory to decide every constraint.
// `last_h` is the most recent horizontal step; t1/t2 are the trailing
// verticals taken since then (t1 most recent). Tracking the pre-run
// horizontal is what lets the height clauses distinguish, say, an NE1 that
// left height 1 from an SE1 that left height 3 once a D has been taken.
struct Walk {
    long long x = 0;
    long long y = 0;
    bool started = false;
    Step last_h = Step::NE1;
    int trail = 0;  // number of trailing verticals (0..2 under bounded policies)
    Step t1 = Step::U;
    Step t2 = Step::U;
};

Constraint step_violation(const RuleConfig& rules, const Walk& w, Step step) {
    if (!w.started) {
        if (step != Step::NE1) return Constraint::leading_step;
        return Constraint::none;
    }
    if (step_is_vertical(step)) {
        // quarter plane first: it is part of the walk's definition
        if (step == Step::D && w.y == 0) return Constraint::quarter_plane;
        switch (rules.vertical_policy) {
            case VerticalPolicy::same_direction_runs:
                if (w.trail >= 1 && (w.t1 != step || w.trail >= 2)) return Constraint::vertical_run;
                break;
            case VerticalPolicy::mixed_pairs_bounded:
                if (w.trail >= 2) return Constraint::vertical_run;
                break;
            case VerticalPolicy::mixed_pairs_monotone_triples:
                if (w.trail >= 2 && w.t1 == step && w.t2 == step) return Constraint::vertical_run;
                break;
            case VerticalPolicy::no_vertical_pairs:
                if (w.trail >= 1) return Constraint::vertical_run;
                break;
        }
        if (w.trail == 0) {
            if (w.last_h == Step::NE2 && step == Step::U) return Constraint::after_long_diagonal;
            if (w.last_h == Step::SE2 && step == Step::D) return Constraint::after_long_diagonal;
        }
        if (step == Step::D) {
            // NE1 then D,D: the second D is the offending step. With one D
            // taken, the NE1 departed from the current height.
            if (w.trail == 1 && w.t1 == Step::D && w.last_h == Step::NE1) {
                const long long departure = w.y;
                const long long arrival = w.y + 1;
                if (rules.ne1_dd_at_departure ? departure == 1 : arrival == 1)
                    return Constraint::height_rule;
            }
            // SE1 then D: with no verticals taken, the SE1 departed from y+1.
            if (w.trail == 0 && w.last_h == Step::SE1) {
                const long long departure = w.y + 1;
                const long long arrival = w.y;
                if (rules.se1_d_at_departure ? departure == 2 : arrival == 2)
                    return Constraint::height_rule;
            }
        }
        return Constraint::none;
    }
    // horizontal step
    switch (step) {
        case Step::NE1:
            return Constraint::none;
        case Step::SE1:
            return w.y >= 1 ? Constraint::none : Constraint::quarter_plane;
        case Step::NE2:
            if (rules.ne2_ground_at_departure && w.y == 0) return Constraint::height_rule;
            return Constraint::none;  // arrival reading can never trigger
        case Step::SE2:
            return w.y >= 2 ? Constraint::none : Constraint::quarter_plane;
        default:
            return Constraint::none;
    }
}

void apply_step(Walk& w, Step step) {
    w.x += step_dx(step);
    w.y += step_dy(step);
    w.started = true;
    if (step_is_vertical(step)) {
        w.t2 = w.t1;
        w.t1 = step;
        w.trail = std::min(w.trail + 1, 2);
    } else {
        w.last_h = step;
        w.trail = 0;
    }
}

bool bounded_policy(VerticalPolicy p) {
    return p != VerticalPolicy::mixed_pairs_monotone_triples;
}

constexpr Step kStepOrder[6] = {Step::U,   Step::D,   Step::NE1,
                                Step::SE1, Step::NE2, Step::SE2};

// ---- dynamic programming over (height, last horizontal, trailing pair) ----

// State packing: last horizontal in {START, NE1, SE1, NE2, SE2} (0..4),
// trailing verticals t1/t2 in {none, U, D} (0..2 each).
constexpr int kStates = 5 * 3 * 3;

int pack(const Walk& w) {
    int h = 0;
    if (w.started) {
        switch (w.last_h) {
            case Step::NE1: h = 1; break;
            case Step::SE1: h = 2; break;
            case Step::NE2: h = 3; break;
            case Step::SE2: h = 4; break;
            default: h = 0; break;
        }
    }
    int t1 = w.trail >= 1 ? (w.t1 == Step::U ? 1 : 2) : 0;
    int t2 = w.trail >= 2 ? (w.t2 == Step::U ? 1 : 2) : 0;
    return (h * 3 + t1) * 3 + t2;
}

Walk unpack(int code, long long x, long long y) {
    Walk w;
    w.x = x;
    w.y = y;
    int t2 = code % 3;
    int t1 = (code / 3) % 3;
    int h = code / 9;
    w.started = h != 0;
    switch (h) {
        case 1: w.last_h = Step::NE1; break;
        case 2: w.last_h = Step::SE1; break;
        case 3: w.last_h = Step::NE2; break;
        case 4: w.last_h = Step::SE2; break;
        default: break;
    }
    w.trail = (t1 != 0) + (t2 != 0);
    if (t1 != 0) w.t1 = t1 == 1 ? Step::U : Step::D;
    if (t2 != 0) w.t2 = t2 == 1 ? Step::U : Step::D;
    return w;
}

// dp[y][state] for one column.
using Column = std::vector<std::vector<Natural>>;

Column make_column(long long height) {
    return Column(static_cast<std::size_t>(height) + 1,
                  std::vector<Natural>(kStates));
}

}  // namespace

ValidationResult is_valid(const Path& path, const RuleConfig& rules) {
    Walk w;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const Step step = path.steps[i];
        const Constraint c = step_violation(rules, w, step);
        if (c != Constraint::none) {
            std::ostringstream reason;
            reason << "step " << i << " (" << step_name(step) << ") violates "
                   << constraint_name(c);
            return ValidationResult{false, c, i, reason.str()};
        }
        apply_step(w, step);
    }
    return ValidationResult{};
}

Natural count_paths(int n, long long k, const RuleConfig& rules) {
    if (n < 0) throw std::domain_error("n must be >= 0");
    if (!bounded_policy(rules.vertical_policy))
        throw std::invalid_argument(
            "counting requires a vertical policy with bounded runs");
    if (k < 0 || k > 3ll * n) return 0;

    // Column 0 holds only the empty walk; heights are bounded by 3x, which
    // the transitions below assert rather than assume.
    Column col = make_column(0);
    col[0][pack(Walk{})] = 1;

    Natural total = 0;
    for (int x = 0; x <= n; ++x) {
        const long long height = 3ll * x;
        // close the column: up to two vertical extensions
        Column added = col;
        for (int round = 0; round < 2; ++round) {
            Column next = make_column(height);
            bool any = false;
            for (long long y = 0; y <= height; ++y) {
                for (int code = 0; code < kStates; ++code) {
                    const Natural& cnt = added[static_cast<std::size_t>(y)][code];
                    if (cnt == 0) continue;
                    Walk w = unpack(code, x, y);
                    for (Step v : {Step::U, Step::D}) {
                        if (step_violation(rules, w, v) != Constraint::none) continue;
                        Walk nw = w;
                        apply_step(nw, v);
                        if (nw.y < 0 || nw.y > height)
                            throw std::logic_error("height bound 3x violated in column");
                        next[static_cast<std::size_t>(nw.y)][pack(nw)] += cnt;
                        any = true;
                    }
                }
            }
            if (!any) break;
            for (long long y = 0; y <= height; ++y)
                for (int code = 0; code < kStates; ++code) {
                    col[static_cast<std::size_t>(y)][code] += next[static_cast<std::size_t>(y)][code];
                }
            added = std::move(next);
        }

        if (x == n) {
            if (k <= height)
                for (int code = 0; code < kStates; ++code)
                    total += col[static_cast<std::size_t>(k)][code];
            break;
        }

        // advance to column x+1 with one horizontal step
        const long long next_height = 3ll * (x + 1);
        Column next = make_column(next_height);
        for (long long y = 0; y <= height; ++y) {
            for (int code = 0; code < kStates; ++code) {
                const Natural& cnt = col[static_cast<std::size_t>(y)][code];
                if (cnt == 0) continue;
                Walk w = unpack(code, x, y);
                for (Step h : {Step::NE1, Step::SE1, Step::NE2, Step::SE2}) {
                    if (step_violation(rules, w, h) != Constraint::none) continue;
                    Walk nw = w;
                    apply_step(nw, h);
                    if (nw.y < 0 || nw.y > next_height)
                        throw std::logic_error("height bound 3x violated on advance");
                    next[static_cast<std::size_t>(nw.y)][pack(nw)] += cnt;
                }
            }
        }
        col = std::move(next);
    }
    return total;
}

namespace {

struct Enumerator {
    int n;
    long long k;
    std::size_t limit;
    const RuleConfig& rules;
    std::vector<Step> current;
    std::vector<Path> out;

    bool reachable(const Walk& w) const {
        const long long cols_left = n - w.x;
        // climb: at most +2 verticals now, then <= +3 per later column
        if (w.y + 2 + 3 * cols_left < k) return false;
        // descent: at most -2 now, then <= -4 per later column
        if (w.y - 2 - 4 * cols_left > k) return false;
        return true;
    }

    bool dfs(const Walk& w) {
        if (w.x == n && w.y == k) {
            out.push_back(Path{current});
            if (out.size() >= limit) return false;
        }
        for (Step step : kStepOrder) {
            if (step_dx(step) == 1 && w.x == n) continue;
            if (step_violation(rules, w, step) != Constraint::none) continue;
            Walk nw = w;
            apply_step(nw, step);
            if (!reachable(nw)) continue;
            current.push_back(step);
            const bool keep_going = dfs(nw);
            current.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<Path> enumerate_paths(int n, long long k, std::size_t limit,
                                  int exhaustive_bound, const RuleConfig& rules) {
    if (n < 0) throw std::domain_error("n must be >= 0");
    if (!bounded_policy(rules.vertical_policy))
        throw std::invalid_argument(
            "enumeration requires a vertical policy with bounded runs");
    if (n > exhaustive_bound) {
        std::ostringstream msg;
        msg << "enumeration refused: n = " << n
            << " exceeds the exhaustive bound " << exhaustive_bound;
        throw resource_error(msg.str());
    }
    if (limit == 0 || k < 0 || k > 3ll * n) return {};
    Enumerator e{n, k, limit, rules, {}, {}};
    e.dfs(Walk{});
    return std::move(e.out);
}

std::string to_step_string(const Path& path) {
    std::string out;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (i > 0) out += ' ';
        out += step_name(path.steps[i]);
    }
    return out;
}

std::string render_ascii(const Path& path) {
    long long x = 0, y = 0;
    long long min_y = 0, max_y = 0, max_x = 0;
    std::vector<Point> visited{{0, 0}};
    for (Step s : path.steps) {
        x += step_dx(s);
        y += step_dy(s);
        visited.push_back({x, y});
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
        max_x = std::max(max_x, x);
    }
    const long long rows = max_y - min_y + 1;
    const long long cols = max_x + 1;
    std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                  std::string(static_cast<std::size_t>(cols), '.'));
    auto cell = [&](const Point& p) -> char& {
        return grid[static_cast<std::size_t>(max_y - p.y)][static_cast<std::size_t>(p.x)];
    };
    for (std::size_t i = 1; i + 1 < visited.size(); ++i) cell(visited[i]) = '*';
    cell(visited.front()) = 'S';
    if (visited.size() > 1) cell(visited.back()) = 'E';
    std::ostringstream out;
    for (long long r = 0; r < rows; ++r) {
        out << (max_y - r) << " | " << grid[static_cast<std::size_t>(r)] << '\n';
    }
    return out.str();
}

Path parse_path(std::string_view text) {
    Path path;
    std::size_t pos = 0;
    std::size_t token_index = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view token = text.substr(pos, end - pos);
        ++token_index;
        bool matched = false;
        for (Step s : kStepOrder) {
            if (token == step_name(s)) {
                path.steps.push_back(s);
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::ostringstream msg;
            msg << "unknown step token '" << token << "' at position " << token_index;
            throw parse_error(msg.str(), token_index);
        }
        pos = end;
    }
    return path;
}

namespace {

// Brute-force endpoint counter used only by calibration. Counts walks under
// arbitrary readings, including unbounded ones, by capping the path length
// and aborting as soon as any endpoint exceeds its target. Any reading that
// out-lives the budget hosts arbitrarily long vertical chains and therefore
// infinitely many walks, so hitting the cap is itself disqualifying.
struct CalibrationScan {
    int n_max;
    std::size_t budget;
    const RuleConfig& rules;
    const std::vector<TriangleRow>& targets;
    std::vector<std::vector<Natural>> counts;  // counts[x][y], y <= 3x
    bool overcount = false;
    bool diverged = false;
    std::size_t depth = 0;

    const Natural* target_at(long long x, long long y) const {
        if (y < 0 || y > 3 * x) return nullptr;
        return &targets[static_cast<std::size_t>(x)].entries[static_cast<std::size_t>(y)];
    }

    void dfs(const Walk& w) {
        if (overcount || diverged) return;
        if (w.y <= 3 * w.x) {
            Natural& c = counts[static_cast<std::size_t>(w.x)][static_cast<std::size_t>(w.y)];
            ++c;
            const Natural* target = target_at(w.x, w.y);
            if (target != nullptr && c > *target) {
                overcount = true;
                return;
            }
        } else {
            // the triangle has no entry here, so one walk is one too many
            overcount = true;
            return;
        }
        bool extendable = false;
        for (Step step : kStepOrder) {
            if (step_dx(step) == 1 && w.x == n_max) continue;
            if (step_violation(rules, w, step) != Constraint::none) continue;
            extendable = true;
            if (depth >= budget) {
                diverged = true;
                return;
            }
            Walk nw = w;
            apply_step(nw, step);
            ++depth;
            dfs(nw);
            --depth;
            if (overcount || diverged) return;
        }
        (void)extendable;
    }
};

}  // namespace

std::vector<RuleConfig> all_rule_configs() {
    std::vector<RuleConfig> configs;
    for (VerticalPolicy policy :
         {VerticalPolicy::same_direction_runs, VerticalPolicy::mixed_pairs_bounded,
          VerticalPolicy::mixed_pairs_monotone_triples, VerticalPolicy::no_vertical_pairs})
        for (bool ne2 : {true, false})
            for (bool ne1 : {true, false})
                for (bool se1 : {true, false})
                    configs.push_back(RuleConfig{ne2, ne1, se1, policy});
    return configs;
}

CalibrationResult calibrate_rules(int n_max) {
    if (n_max < 4) throw std::domain_error("calibration requires n_max >= 4");
    const std::vector<TriangleRow> targets = triangle_rows(3, n_max);
    const std::size_t budget =
        static_cast<std::size_t>(n_max) + 2 * (static_cast<std::size_t>(n_max) + 1) + 4;

    CalibrationResult result;
    result.n_max = n_max;
    for (const RuleConfig& rules : all_rule_configs()) {
        CalibrationScan scan{n_max, budget, rules, targets, {}, false, false, 0};
        scan.counts.resize(static_cast<std::size_t>(n_max) + 1);
        for (int x = 0; x <= n_max; ++x)
            scan.counts[static_cast<std::size_t>(x)].assign(static_cast<std::size_t>(3 * x) + 1,
                                                            Natural(0));
        scan.dfs(Walk{});
        if (scan.overcount || scan.diverged) continue;
        bool match = true;
        for (int x = 0; x <= n_max && match; ++x)
            for (long long y = 0; y <= 3ll * x && match; ++y)
                if (scan.counts[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] !=
                    targets[static_cast<std::size_t>(x)].entries[static_cast<std::size_t>(y)])
                    match = false;
        if (match) result.survivors.push_back(rules);
    }
    if (result.survivors.size() == 1)
        result.status = CalibrationResult::Status::unique;
    else if (result.survivors.empty())
        result.status = CalibrationResult::Status::none_matching;
    else
        result.status = CalibrationResult::Status::ambiguous;
    return result;
}

}  // namespace tricat
