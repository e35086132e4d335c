#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tricat/bfile.hpp"
#include "tricat/bisnomial.hpp"
#include "tricat/catalan.hpp"
#include "tricat/errors.hpp"
#include "tricat/formats.hpp"
#include "tricat/paths.hpp"
#include "tricat/positivity.hpp"
#include "tricat/report.hpp"

namespace {

using namespace tricat;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

CheckResult from_positivity(std::string name, const PositivityReport& report,
                            long long millis) {
    CheckResult check;
    check.name = std::move(name);
    check.range = report.range;
    check.pass = report.pass;
    check.millis = millis;
    if (!report.pass) check.counterexample_json = report.to_json();
    return check;
}

/// Runs `body`, timing it and turning any pass/fail + counterexample into a
/// CheckResult row.
template <typename Body>
void run_check(ReportBundle& bundle, std::string name, std::string range, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string counterexample = "null";
    const bool pass = body(counterexample);
    CheckResult check;
    check.name = std::move(name);
    check.range = std::move(range);
    check.pass = pass;
    check.counterexample_json = std::move(counterexample);
    check.millis = elapsed_ms(start);
    bundle.checks.push_back(std::move(check));
}

struct VerifyOptions {
    int identities_nmax = 20;
    int theorem24_nmax = 6;
    int dfs_nmax = 5;
    int logconvex_nmax = 200;
    int injection_nmax = 7;
    int logconcave_nmax = 100;
    int trials = 1000;
    std::uint64_t seed = Lemma41Params{}.seed;
    int open_seq_nmax = 60;
    int open_rows_nmax = 40;
};

void verify_identities(ReportBundle& bundle, const VerifyOptions& opt) {
    const int n_max = opt.identities_nmax;
    for (int s = 1; s <= 4; ++s) {
        run_check(bundle, "symmetry s=" + std::to_string(s),
                  "n<=" + std::to_string(n_max), [&](std::string& ce) {
                      for (int n = 0; n <= n_max; ++n) {
                          const auto row = s_pascal_row(s, n).coeffs;
                          for (std::size_t k = 0; k < row.size(); ++k)
                              if (row[k] != row[row.size() - 1 - k]) {
                                  ce = "{\"n\":" + std::to_string(n) +
                                       ",\"k\":" + std::to_string(k) + "}";
                                  return false;
                              }
                      }
                      return true;
                  });
        run_check(bundle, "row-recurrence vs expansion s=" + std::to_string(s),
                  "n<=" + std::to_string(n_max), [&](std::string& ce) {
                      for (int n = 0; n <= n_max; ++n)
                          if (s_pascal_row(s, n).coeffs != s_pascal_row_by_expansion(s, n).coeffs) {
                              ce = "{\"n\":" + std::to_string(n) + "}";
                              return false;
                          }
                      return true;
                  });
        run_check(bundle, "absorption s=" + std::to_string(s),
                  "n<=" + std::to_string(n_max), [&](std::string& ce) {
                      for (int n = 1; n <= n_max; ++n)
                          for (long long k = 0; k <= static_cast<long long>(s) * n; ++k) {
                              const auto [lhs, rhs] = absorption_sides(s, n, k);
                              if (lhs != rhs) {
                                  ce = "{\"n\":" + std::to_string(n) + ",\"k\":" +
                                       std::to_string(k) + ",\"lhs\":" + lhs.str() +
                                       ",\"rhs\":" + rhs.str() + "}";
                                  return false;
                              }
                          }
                      return true;
                  });
        run_check(bundle, "row sum s=" + std::to_string(s), "n<=" + std::to_string(n_max),
                  [&](std::string& ce) {
                      for (int n = 0; n <= n_max; ++n) {
                          Natural sum = 0;
                          for (const auto& v : s_pascal_row(s, n).coeffs) sum += v;
                          if (sum != natural_pow(Natural(s + 1), static_cast<unsigned>(n))) {
                              ce = "{\"n\":" + std::to_string(n) + ",\"sum\":" + sum.str() + "}";
                              return false;
                          }
                      }
                      return true;
                  });
    }
    run_check(bundle, "dual triangle construction", "n<=" + std::to_string(n_max),
              [&](std::string& ce) {
                  const auto direct = triangle_rows(3, n_max);
                  const auto rec = triangle_rows_recurrence(n_max);
                  for (int n = 0; n <= n_max; ++n)
                      if (direct[static_cast<std::size_t>(n)].entries !=
                          rec[static_cast<std::size_t>(n)].entries) {
                          ce = "{\"n\":" + std::to_string(n) + "}";
                          return false;
                      }
                  return true;
              });
}

void verify_theorem24(ReportBundle& bundle, const VerifyOptions& opt) {
    run_check(bundle, "path counts vs triangle", "n<=" + std::to_string(opt.theorem24_nmax),
              [&](std::string& ce) {
                  for (int n = 0; n <= opt.theorem24_nmax; ++n) {
                      const auto row = triangle_row_direct(n);
                      for (long long k = 0; k <= 3ll * n + 2; ++k) {
                          const Natural expected =
                              k <= 3ll * n ? row.entries[static_cast<std::size_t>(k)] : Natural(0);
                          const Natural got = count_paths(n, k);
                          if (got != expected) {
                              ce = "{\"n\":" + std::to_string(n) + ",\"k\":" + std::to_string(k) +
                                   ",\"paths\":" + got.str() + ",\"triangle\":" + expected.str() + "}";
                              return false;
                          }
                      }
                  }
                  return true;
              });
    run_check(bundle, "exhaustive enumeration vs counting",
              "n<=" + std::to_string(opt.dfs_nmax), [&](std::string& ce) {
                  for (int n = 0; n <= opt.dfs_nmax; ++n)
                      for (long long k = 0; k <= 3ll * n; ++k) {
                          const auto listed = enumerate_paths(n, k);
                          if (Natural(listed.size()) != count_paths(n, k)) {
                              ce = "{\"n\":" + std::to_string(n) + ",\"k\":" + std::to_string(k) + "}";
                              return false;
                          }
                      }
                  return true;
              });
}

void verify_logconvex(ReportBundle& bundle, const VerifyOptions& opt) {
    {
        const auto start = std::chrono::steady_clock::now();
        const auto seq = s_catalan_sequence(3, opt.logconvex_nmax);
        const auto report = is_log_convex(seq, "s=3 Catalan numbers");
        bundle.checks.push_back(
            from_positivity("log-convexity of s=3 Catalan numbers", report, elapsed_ms(start)));
    }
    {
        const auto start = std::chrono::steady_clock::now();
        const auto report = injection_counting_check(opt.injection_nmax);
        bundle.checks.push_back(
            from_positivity("path-count square bound", report, elapsed_ms(start)));
    }
}

void verify_logconcave(ReportBundle& bundle, const VerifyOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = triangle_rows(3, opt.logconcave_nmax);
    for (int n = 2; n <= opt.logconcave_nmax; ++n) {
        const auto report = is_log_concave(rows[static_cast<std::size_t>(n)].entries,
                                           "triangle row " + std::to_string(n));
        if (!report.pass) {
            bundle.checks.push_back(from_positivity("log-concavity of triangle rows", report,
                                                    elapsed_ms(start)));
            return;
        }
    }
    CheckResult check;
    check.name = "log-concavity of triangle rows";
    check.range = "rows 2.." + std::to_string(opt.logconcave_nmax);
    check.pass = true;
    check.millis = elapsed_ms(start);
    bundle.checks.push_back(std::move(check));
}

void verify_lemma41(ReportBundle& bundle, const VerifyOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    Lemma41Params params;
    params.trials = opt.trials;
    params.seed = opt.seed;
    const auto report = check_lemma41(params);
    bundle.checks.push_back(
        from_positivity("operator preserves log-concavity", report, elapsed_ms(start)));
}

// Open-problem territory: verdicts below are evidence about conjectures, not
// theorem checks; they are reported the same way but carry no claim.
void verify_openproblems(ReportBundle& bundle, const VerifyOptions& opt) {
    for (int s = 4; s <= 5; ++s) {
        {
            const auto start = std::chrono::steady_clock::now();
            const auto seq = s_catalan_sequence(s, opt.open_seq_nmax);
            const auto report =
                is_log_convex(seq, "s=" + std::to_string(s) + " Catalan numbers");
            bundle.checks.push_back(from_positivity(
                "evidence: log-convexity s=" + std::to_string(s), report, elapsed_ms(start)));
        }
        {
            const auto start = std::chrono::steady_clock::now();
            const auto rows = triangle_rows(s, opt.open_rows_nmax);
            bool pass = true;
            std::string ce = "null";
            for (int n = 2; n <= opt.open_rows_nmax && pass; ++n) {
                const auto report = is_log_concave(rows[static_cast<std::size_t>(n)].entries,
                                                   "row " + std::to_string(n));
                if (!report.pass) {
                    pass = false;
                    ce = report.to_json();
                }
            }
            CheckResult check;
            check.name = "evidence: row log-concavity s=" + std::to_string(s);
            check.range = "rows 2.." + std::to_string(opt.open_rows_nmax);
            check.pass = pass;
            check.counterexample_json = ce;
            check.millis = elapsed_ms(start);
            bundle.checks.push_back(std::move(check));
        }
    }
}

int emit_bundle(const ReportBundle& bundle, const std::string& json_path) {
    std::cout << bundle.to_text();
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write report to " << json_path << '\n';
            return kExitUsage;
        }
        out << bundle.to_json() << '\n';
    }
    return bundle.all_pass() ? kExitPass : kExitCounterexample;
}

formats::TriangleMethod parse_method(const std::string& name) {
    if (name == "direct") return formats::TriangleMethod::direct;
    if (name == "recurrence") return formats::TriangleMethod::recurrence;
    return formats::TriangleMethod::both;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"s-Pascal coefficients, s-Catalan numbers, the s=3 Catalan triangle,\n"
                 "its lattice-path interpretation, and positivity verification"};
    app.set_version_flag("--version", std::string("tricat ") + kToolVersion);
    app.require_subcommand(1);

    std::string format = "table";
    std::string json_path;

    // pascal
    auto* pascal = app.add_subcommand("pascal", "emit s-Pascal triangle rows 0..n");
    int pascal_s = 3, pascal_n = 4;
    pascal->add_option("-s,--step", pascal_s, "alphabet parameter s >= 1")->check(CLI::PositiveNumber);
    pascal->add_option("-n,--rows", pascal_n, "last row index")->check(CLI::NonNegativeNumber);
    pascal->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // catalan
    auto* catalan = app.add_subcommand("catalan", "emit s-Catalan numbers C_0..C_n");
    int catalan_s = 3, catalan_n = 10;
    catalan->add_option("-s,--step", catalan_s, "alphabet parameter s >= 1")->check(CLI::PositiveNumber);
    catalan->add_option("-n,--count", catalan_n, "last index")->check(CLI::NonNegativeNumber);
    catalan->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // triangle
    auto* triangle = app.add_subcommand("triangle", "emit s-Catalan triangle rows 0..n");
    int triangle_s = 3, triangle_n = 4;
    std::string method = "both";
    triangle->add_option("-s,--step", triangle_s, "alphabet parameter (recurrence needs s=3)")
        ->check(CLI::PositiveNumber);
    triangle->add_option("-n,--rows", triangle_n, "last row index")->check(CLI::NonNegativeNumber);
    triangle->add_option("--method", method, "direct|recurrence|both")
        ->check(CLI::IsMember({"direct", "recurrence", "both"}));
    triangle->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // paths
    auto* paths = app.add_subcommand("paths", "count, list or render constrained walks to (n,k)");
    std::string action;
    int paths_n = 0;
    long long paths_k = 0;
    std::size_t limit = std::numeric_limits<std::size_t>::max();
    int bound = kDefaultEnumerationBound;
    paths->add_option("action", action, "count|list|render")->required()
        ->check(CLI::IsMember({"count", "list", "render"}));
    paths->add_option("n", paths_n, "target column")->required()->check(CLI::NonNegativeNumber);
    paths->add_option("k", paths_k, "target height")->required();
    paths->add_option("--limit", limit, "truncate listings");
    paths->add_option("--bound", bound, "exhaustive enumeration bound (default 6)");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite;
    VerifyOptions opt;
    std::optional<int> nmax_override;
    verify->add_option("suite", suite,
                       "identities|theorem24|logconvex|logconcave|lemma41|openproblems|all")
        ->required()
        ->check(CLI::IsMember({"identities", "theorem24", "logconvex", "logconcave",
                               "lemma41", "openproblems", "all"}));
    verify->add_option("--nmax", nmax_override, "override the suite's main bound");
    verify->add_option("--trials", opt.trials, "lemma41 trial count")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "lemma41 seed");
    verify->add_option("--json", json_path, "write the JSON report here");

    // oeis-check
    auto* oeis = app.add_subcommand("oeis-check", "compare flattened s-Pascal rows with a b-file");
    std::string bfile_path;
    int oeis_s = 3, oeis_n = 8;
    oeis->add_option("--bfile", bfile_path, "b-file path")->required();
    oeis->add_option("-s,--step", oeis_s, "alphabet parameter")->check(CLI::PositiveNumber);
    oeis->add_option("-n,--rows", oeis_n, "last row index to flatten")->check(CLI::NonNegativeNumber);
    oeis->add_option("--json", json_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (pascal->parsed()) {
            if (format == "csv")
                std::cout << formats::pascal_csv(pascal_s, pascal_n);
            else if (format == "json")
                std::cout << formats::pascal_json(pascal_s, pascal_n) << '\n';
            else
                std::cout << formats::pascal_table(pascal_s, pascal_n);
            return kExitPass;
        }
        if (catalan->parsed()) {
            if (format == "csv")
                std::cout << formats::catalan_csv(catalan_s, catalan_n);
            else if (format == "json")
                std::cout << formats::catalan_json(catalan_s, catalan_n) << '\n';
            else
                std::cout << formats::catalan_table(catalan_s, catalan_n);
            return kExitPass;
        }
        if (triangle->parsed()) {
            const auto m = parse_method(method);
            try {
                if (format == "csv")
                    std::cout << formats::triangle_csv(triangle_s, triangle_n, m);
                else if (format == "json")
                    std::cout << formats::triangle_json(triangle_s, triangle_n, m) << '\n';
                else
                    std::cout << formats::triangle_table(triangle_s, triangle_n, m);
            } catch (const std::runtime_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitCounterexample;
            }
            return kExitPass;
        }
        if (paths->parsed()) {
            if (action == "count") {
                std::cout << count_paths(paths_n, paths_k).str() << '\n';
            } else {
                const auto walks = enumerate_paths(paths_n, paths_k, limit, bound);
                for (const auto& walk : walks) {
                    std::cout << to_step_string(walk) << '\n';
                    if (action == "render") std::cout << render_ascii(walk) << '\n';
                }
            }
            return kExitPass;
        }
        if (verify->parsed()) {
            if (nmax_override) {
                opt.identities_nmax = *nmax_override;
                opt.theorem24_nmax = *nmax_override;
                opt.logconvex_nmax = *nmax_override;
                opt.logconcave_nmax = *nmax_override;
                opt.open_seq_nmax = *nmax_override;
                opt.open_rows_nmax = std::min(opt.open_rows_nmax, *nmax_override);
                opt.dfs_nmax = std::min(opt.dfs_nmax, *nmax_override);
                opt.injection_nmax = std::min(opt.injection_nmax, *nmax_override);
            }
            ReportBundle bundle;
            bundle.command = "verify " + suite;
            if (suite == "identities" || suite == "all") verify_identities(bundle, opt);
            if (suite == "theorem24" || suite == "all") verify_theorem24(bundle, opt);
            if (suite == "logconvex" || suite == "all") verify_logconvex(bundle, opt);
            if (suite == "logconcave" || suite == "all") verify_logconcave(bundle, opt);
            if (suite == "lemma41" || suite == "all") verify_lemma41(bundle, opt);
            if (suite == "openproblems" || suite == "all") verify_openproblems(bundle, opt);
            return emit_bundle(bundle, json_path);
        }
        if (oeis->parsed()) {
            BFile bfile;
            try {
                bfile = load_bfile(bfile_path);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitUsage;
            }
            const auto start = std::chrono::steady_clock::now();
            const auto check = compare_flattened_pascal(bfile, oeis_s, oeis_n);
            ReportBundle bundle;
            bundle.command = "oeis-check " + bfile.id;
            CheckResult result;
            result.name = "flattened rows vs " + (bfile.id.empty() ? std::string("b-file") : bfile.id);
            result.range = "rows 0.." + std::to_string(oeis_n) + ", " +
                           std::to_string(check.compared) + " positions";
            result.pass = check.pass;
            if (!check.pass)
                result.counterexample_json = "{\"index\":" + std::to_string(*check.mismatch_index) +
                                             ",\"bfile\":" + check.expected.str() +
                                             ",\"computed\":" + check.actual.str() + "}";
            result.millis = elapsed_ms(start);
            bundle.checks.push_back(std::move(result));
            return emit_bundle(bundle, json_path);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
