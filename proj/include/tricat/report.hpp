#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tricat {

inline constexpr const char* kToolVersion = "0.1.0";

/// One verification check: verdict plus an optional counterexample object
/// (pre-serialized JSON, "null" when absent).
struct CheckResult {
    std::string name;
    std::string range;
    bool pass = false;
    std::string counterexample_json = "null";
    long long millis = 0;
};

/// Machine- and human-readable summary of a verify invocation. The JSON
/// layout is {"version", "command", "checks": [{"name", "range", "verdict",
/// "counterexample", "millis"}]}.
struct ReportBundle {
    std::string version = kToolVersion;
    std::string command;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_json() const;
    std::string to_text() const;
};

/// Minimal JSON string escaping (quotes, backslashes, control characters).
std::string json_escape(std::string_view text);

}  // namespace tricat
