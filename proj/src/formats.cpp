#include "tricat/formats.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tricat/errors.hpp"

namespace tricat::formats {

namespace {

std::string csv_rows(const std::vector<std::vector<Natural>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += row[i].str();
        }
        out += '\n';
    }
    return out;
}

std::string table_rows(const std::vector<std::vector<Natural>>& rows) {
    std::ostringstream out;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        out << n << ':';
        for (const auto& v : rows[n]) out << ' ' << v.str();
        out << '\n';
    }
    return out.str();
}

std::vector<std::vector<Natural>> pascal_rows(int s, int n_max) {
    std::vector<std::vector<Natural>> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<Natural> row{Natural(1)};
    rows.push_back(row);
    for (int n = 1; n <= n_max; ++n) {
        row = advance_pascal_row(row, s);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::string json_int_array(const std::vector<Natural>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += values[i].str();
    }
    out += ']';
    return out;
}

std::string pascal_csv(int s, int n_max) { return csv_rows(pascal_rows(s, n_max)); }

std::string pascal_json(int s, int n_max) {
    const auto rows = pascal_rows(s, n_max);
    std::string out = "{\"s\":" + std::to_string(s) + ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) out += ',';
        out += json_int_array(rows[i]);
    }
    out += "]}";
    return out;
}

std::string pascal_table(int s, int n_max) { return table_rows(pascal_rows(s, n_max)); }

std::string catalan_csv(int s, int n_max) {
    const auto values = s_catalan_sequence(s, n_max);
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += values[i].str();
    }
    out += '\n';
    return out;
}

std::string catalan_json(int s, int n_max) {
    return "{\"s\":" + std::to_string(s) +
           ",\"values\":" + json_int_array(s_catalan_sequence(s, n_max)) + "}";
}

std::string catalan_table(int s, int n_max) {
    const auto values = s_catalan_sequence(s, n_max);
    std::ostringstream out;
    for (std::size_t n = 0; n < values.size(); ++n)
        out << n << ": " << values[n].str() << '\n';
    return out.str();
}

std::vector<std::vector<Natural>> triangle_rows_for(int s, int n_max,
                                                    TriangleMethod method) {
    if (method != TriangleMethod::direct && s != 3)
        throw std::invalid_argument("the recurrence construction exists only for s = 3");
    std::vector<std::vector<Natural>> rows;
    if (method == TriangleMethod::direct || method == TriangleMethod::both) {
        for (auto& row : triangle_rows(s, n_max)) rows.push_back(std::move(row.entries));
    }
    if (method == TriangleMethod::recurrence || method == TriangleMethod::both) {
        auto rec = triangle_rows_recurrence(n_max);
        if (method == TriangleMethod::recurrence) {
            for (auto& row : rec) rows.push_back(std::move(row.entries));
        } else {
            for (int n = 0; n <= n_max; ++n) {
                const auto& direct = rows[static_cast<std::size_t>(n)];
                const auto& other = rec[static_cast<std::size_t>(n)].entries;
                for (std::size_t k = 0; k < direct.size(); ++k) {
                    if (direct[k] != other[k]) {
                        std::ostringstream msg;
                        msg << "construction disagreement at (n=" << n << ", k=" << k
                            << "): direct=" << direct[k].str()
                            << " recurrence=" << other[k].str();
                        throw std::runtime_error(msg.str());
                    }
                }
            }
        }
    }
    return rows;
}

std::string triangle_csv(int s, int n_max, TriangleMethod method) {
    return csv_rows(triangle_rows_for(s, n_max, method));
}

std::string triangle_json(int s, int n_max, TriangleMethod method) {
    const auto rows = triangle_rows_for(s, n_max, method);
    const char* name = method == TriangleMethod::direct
                           ? "direct"
                           : method == TriangleMethod::recurrence ? "recurrence" : "both";
    std::string out = "{\"s\":" + std::to_string(s) + ",\"method\":\"" + name + "\",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) out += ',';
        out += json_int_array(rows[i]);
    }
    out += "]}";
    return out;
}

std::string triangle_table(int s, int n_max, TriangleMethod method) {
    return table_rows(triangle_rows_for(s, n_max, method));
}

std::vector<std::vector<Natural>> parse_csv_rows(std::string_view text) {
    std::vector<std::vector<Natural>> rows;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        std::vector<Natural> row;
        std::size_t field_start = 0;
        while (field_start <= line.size()) {
            std::size_t comma = line.find(',', field_start);
            if (comma == std::string_view::npos) comma = line.size();
            std::string_view field = line.substr(field_start, comma - field_start);
            if (field.empty()) throw parse_error("empty CSV field", line_no);
            for (char c : field)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw parse_error("non-numeric CSV field", line_no);
            row.emplace_back(std::string(field));
            if (comma == line.size()) break;
            field_start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace tricat::formats
