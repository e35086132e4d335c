#include "tricat/report.hpp"

#include <cstdio>
#include <sstream>

namespace tricat {

std::string json_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

bool ReportBundle::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ReportBundle::to_json() const {
    std::ostringstream out;
    out << "{\"version\":\"" << json_escape(version) << "\",\"command\":\""
        << json_escape(command) << "\",\"checks\":[";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const CheckResult& c = checks[i];
        if (i > 0) out << ',';
        out << "{\"name\":\"" << json_escape(c.name) << "\",\"range\":\""
            << json_escape(c.range) << "\",\"verdict\":\"" << (c.pass ? "pass" : "fail")
            << "\",\"counterexample\":" << c.counterexample_json
            << ",\"millis\":" << c.millis << '}';
    }
    out << "]}";
    return out.str();
}

std::string ReportBundle::to_text() const {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const CheckResult& c : checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.range << ")  "
            << c.millis << " ms\n";
        if (!c.pass) {
            ++failed;
            if (c.counterexample_json != "null")
                out << "      counterexample: " << c.counterexample_json << '\n';
        }
    }
    out << checks.size() << " check(s), " << failed << " failed\n";
    return out.str();
}

}  // namespace tricat
