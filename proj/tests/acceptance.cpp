// Acceptance suite: runs the full battery of exactness checks at their
// contractual bounds and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tricat/bfile.hpp"
#include "tricat/bisnomial.hpp"
#include "tricat/catalan.hpp"
#include "tricat/paths.hpp"
#include "tricat/positivity.hpp"

using namespace tricat;

namespace {

std::vector<Natural> nat_row(std::initializer_list<long long> values) {
    std::vector<Natural> row;
    for (long long v : values) row.emplace_back(v);
    return row;
}

const std::vector<std::vector<Natural>>& pascal_golden() {
    static const std::vector<std::vector<Natural>> rows = {
        nat_row({1}),
        nat_row({1, 1, 1, 1}),
        nat_row({1, 2, 3, 4, 3, 2, 1}),
        nat_row({1, 3, 6, 10, 12, 12, 10, 6, 3, 1}),
        nat_row({1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1}),
    };
    return rows;
}

const std::vector<std::vector<Natural>>& triangle_golden() {
    static const std::vector<std::vector<Natural>> rows = {
        nat_row({1}),
        nat_row({1, 1, 1, 1}),
        nat_row({4, 9, 11, 10, 6, 3, 1}),
        nat_row({34, 90, 120, 120, 96, 64, 35, 15, 5, 1}),
        nat_row({364, 1000, 1400, 1505, 1351, 1044, 700, 406, 202, 84, 28, 7, 1}),
    };
    return rows;
}

Natural factorial(int n) {
    Natural f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool criterion_pascal_golden(std::string& detail) {
    for (int n = 0; n <= 4; ++n)
        if (s_pascal_row(3, n).coeffs != pascal_golden()[static_cast<std::size_t>(n)]) {
            detail = "row " + std::to_string(n) + " differs";
            return false;
        }
    return true;
}

bool criterion_triangle_golden(std::string& detail) {
    for (int n = 0; n <= 4; ++n) {
        const auto& expected = triangle_golden()[static_cast<std::size_t>(n)];
        if (triangle_row_direct(n).entries != expected) {
            detail = "difference construction differs at row " + std::to_string(n);
            return false;
        }
        if (triangle_row_recurrence(n).entries != expected) {
            detail = "recurrence construction differs at row " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_dual_construction(std::string& detail) {
    const auto direct = triangle_rows(3, 30);
    const auto rec = triangle_rows_recurrence(30);
    for (int n = 0; n <= 30; ++n)
        if (direct[static_cast<std::size_t>(n)].entries !=
            rec[static_cast<std::size_t>(n)].entries) {
            detail = "row " + std::to_string(n);
            return false;
        }
    return true;
}

bool criterion_identities(std::string& detail) {
    for (int s = 1; s <= 4; ++s)
        for (int n = 0; n <= 20; ++n) {
            const auto row = s_pascal_row(s, n).coeffs;
            if (row != s_pascal_row_by_expansion(s, n).coeffs) {
                detail = "recurrence vs expansion at s=" + std::to_string(s) +
                         " n=" + std::to_string(n);
                return false;
            }
            Natural sum = 0;
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row[k] != row[row.size() - 1 - k]) {
                    detail = "symmetry at s=" + std::to_string(s) + " n=" + std::to_string(n);
                    return false;
                }
                sum += row[k];
            }
            if (sum != natural_pow(Natural(s + 1), static_cast<unsigned>(n))) {
                detail = "row sum at s=" + std::to_string(s) + " n=" + std::to_string(n);
                return false;
            }
            if (n >= 1)
                for (long long k = 0; k <= static_cast<long long>(s) * n; ++k) {
                    const auto [lhs, rhs] = absorption_sides(s, n, k);
                    if (lhs != rhs) {
                        detail = "absorption at s=" + std::to_string(s) + " n=" +
                                 std::to_string(n) + " k=" + std::to_string(k);
                        return false;
                    }
                }
        }
    return true;
}

bool criterion_path_counts(std::string& detail) {
    for (int n = 0; n <= 7; ++n) {
        const auto row = triangle_row_direct(n);
        for (long long k = 0; k <= 3ll * n; ++k)
            if (count_paths(n, k) != row.entries[static_cast<std::size_t>(k)]) {
                detail = "count mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                return false;
            }
    }
    for (int n = 0; n <= 5; ++n)
        for (long long k = 0; k <= 3ll * n; ++k)
            if (Natural(enumerate_paths(n, k).size()) != count_paths(n, k)) {
                detail = "enumeration mismatch at (" + std::to_string(n) + "," +
                         std::to_string(k) + ")";
                return false;
            }
    return true;
}

bool criterion_calibration(std::string& detail) {
    const auto result = calibrate_rules(4);
    if (result.status != CalibrationResult::Status::unique) {
        detail = result.survivors.empty() ? "no matching reading" : "ambiguous readings";
        return false;
    }
    const RuleConfig& survivor = result.survivors.front();
    if (!survivor.ne2_ground_at_departure) {
        detail = "surviving reading permits NE2 from the ground";
        return false;
    }
    if (count_paths(2, 0, survivor) != 4) {
        detail = "c(2,0) != 4 under the surviving reading";
        return false;
    }
    if (!(survivor == canonical_rules())) {
        detail = "survivor differs from the frozen default";
        return false;
    }
    return true;
}

bool criterion_log_convex(std::string& detail) {
    const auto seq = s_catalan_sequence(3, 200);
    const auto report = is_log_convex(seq, "s=3 Catalan numbers");
    if (!report.pass) {
        detail = report.to_json();
        return false;
    }
    const auto inject = injection_counting_check(7);
    if (!inject.pass) {
        detail = inject.to_json();
        return false;
    }
    return true;
}

bool criterion_log_concave(std::string& detail) {
    const auto rows = triangle_rows(3, 100);
    for (int n = 2; n <= 100; ++n) {
        const auto report = is_log_concave(rows[static_cast<std::size_t>(n)].entries,
                                           "row " + std::to_string(n));
        if (!report.pass) {
            detail = report.to_json();
            return false;
        }
    }
    return true;
}

bool criterion_operator_trials(std::string& detail) {
    Lemma41Params params;  // 1000 trials, fixed seed
    const auto first = check_lemma41(params);
    const auto second = check_lemma41(params);
    if (!first.pass) {
        detail = first.to_json();
        return false;
    }
    if (first.to_json() != second.to_json()) {
        detail = "same-seed reruns differ";
        return false;
    }
    return true;
}

bool criterion_classical_reduction(std::string& detail) {
    const auto seq = s_catalan_sequence(1, 20);
    for (int n = 0; n <= 20; ++n) {
        const Natural expected = factorial(2 * n) / (factorial(n + 1) * factorial(n));
        if (seq[static_cast<std::size_t>(n)] != expected) {
            detail = "n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_oeis_fixture(std::string& detail) {
    const auto bfile = load_bfile(std::string(TRICAT_DATA_DIR) + "/b008287.txt");
    if (bfile.entries.size() < 100) {
        detail = "fixture shorter than 100 terms";
        return false;
    }
    const auto check = compare_flattened_pascal(bfile, 3, 8);
    if (!check.pass) {
        std::ostringstream msg;
        msg << "mismatch at index " << *check.mismatch_index << ": b-file "
            << check.expected.str() << " vs computed " << check.actual.str();
        detail = msg.str();
        return false;
    }
    if (check.compared < 100) {
        detail = "fewer than 100 positions compared";
        return false;
    }
    return true;
}

bool criterion_open_problems(std::string& detail) {
    // evidence runs: the verdicts are reported, not asserted as theorems
    std::ostringstream evidence;
    for (int s = 4; s <= 5; ++s) {
        const auto seq = s_catalan_sequence(s, 60);
        const auto convex = is_log_convex(seq, "s=" + std::to_string(s));
        evidence << "s=" << s << " sequence<=60:" << (convex.pass ? "log-convex" : "violation")
                 << " ";
        const auto rows = triangle_rows(s, 40);
        bool rows_ok = true;
        for (int n = 2; n <= 40 && rows_ok; ++n)
            rows_ok = is_log_concave(rows[static_cast<std::size_t>(n)].entries, "row").pass;
        evidence << "rows<=40:" << (rows_ok ? "log-concave" : "violation") << "  ";
    }
    detail = evidence.str();
    return true;  // completing without error is the criterion
}

struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden s=3 Pascal rows 0..4", criterion_pascal_golden},
        {2, "golden triangle rows 0..4 via both constructions", criterion_triangle_golden},
        {3, "dual-construction equivalence n<=30", criterion_dual_construction},
        {4, "identity suite s<=4 n<=20", criterion_identities},
        {5, "path counts equal triangle entries n<=7, enumeration n<=5", criterion_path_counts},
        {6, "rule calibration at n_max=4 leaves one reading", criterion_calibration},
        {7, "log-convexity n<=200 and path-count square bound n<=7", criterion_log_convex},
        {8, "row log-concavity n<=100", criterion_log_concave},
        {9, "1000 seeded operator trials, reproducible", criterion_operator_trials},
        {10, "classical Catalan reduction n<=20", criterion_classical_reduction},
        {11, "bundled OEIS fixture prefix (>=100 terms)", criterion_oeis_fixture},
        {12, "open-problem evidence s=4,5 (reported, not asserted)", criterion_open_problems},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
                  << criterion.label << "  [" << ms << " ms]";
        if (!detail.empty()) std::cout << "  -- " << detail;
        std::cout << '\n';
        if (!pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
