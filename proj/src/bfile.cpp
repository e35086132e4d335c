#include "tricat/bfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tricat/bisnomial.hpp"
#include "tricat/errors.hpp"

namespace tricat {

namespace {

bool all_digits(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

BFile parse_bfile(std::istream& in, std::string id) {
    BFile bfile;
    bfile.id = std::move(id);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream fields(line);
        std::string index_token, value_token, extra;
        fields >> index_token >> value_token;
        if (value_token.empty() || (fields >> extra)) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'index value', got '" << line << "'";
            throw parse_error(msg.str(), line_no);
        }
        bool index_ok = !index_token.empty() &&
                        all_digits(index_token[0] == '-' ? std::string_view(index_token).substr(1)
                                                         : std::string_view(index_token));
        if (!index_ok || !all_digits(value_token)) {
            std::ostringstream msg;
            msg << "line " << line_no << ": malformed entry '" << line << "'";
            throw parse_error(msg.str(), line_no);
        }
        const long long index = std::stoll(index_token);
        if (!bfile.entries.empty() && index <= bfile.entries.back().first) {
            std::ostringstream msg;
            msg << "line " << line_no << ": index " << index
                << " does not increase past " << bfile.entries.back().first;
            throw parse_error(msg.str(), line_no);
        }
        bfile.entries.emplace_back(index, Natural(value_token));
    }
    return bfile;
}

BFile parse_bfile_text(const std::string& text, std::string id) {
    std::istringstream in(text);
    return parse_bfile(in, std::move(id));
}

BFile load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path.string());
    return parse_bfile(in, path.stem().string());
}

BFileCheck compare_flattened_pascal(const BFile& bfile, int s, int n_max) {
    std::vector<Natural> flat;
    std::vector<Natural> row{Natural(1)};
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) row = advance_pascal_row(row, s);
        flat.insert(flat.end(), row.begin(), row.end());
    }
    BFileCheck check;
    for (const auto& [index, value] : bfile.entries) {
        if (index < 0 || index >= static_cast<long long>(flat.size())) continue;
        ++check.compared;
        const Natural& ours = flat[static_cast<std::size_t>(index)];
        if (ours != value) {
            check.pass = false;
            check.mismatch_index = index;
            check.expected = value;
            check.actual = ours;
            return check;
        }
    }
    return check;
}

}  // namespace tricat
