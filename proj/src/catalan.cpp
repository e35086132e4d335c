#include "tricat/catalan.hpp"

#include <stdexcept>
#include <utility>

namespace tricat {

namespace {

void check_domain(int s, int n) {
    if (s < 1) throw std::domain_error("s must be >= 1");
    if (n < 0) throw std::domain_error("n must be >= 0");
}

Natural row_at(const std::vector<Natural>& row, long long k) {
    if (k < 0 || k >= static_cast<long long>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
}

// Differences of s-Pascal row 2n at offsets s*n + k.
TriangleRow row_from_pascal(const std::vector<Natural>& pascal_2n, int s, int n) {
    const long long base = static_cast<long long>(s) * n;
    TriangleRow row{s, n, {}};
    row.entries.reserve(static_cast<std::size_t>(base) + 1);
    for (long long k = 0; k <= base; ++k)
        row.entries.push_back(row_at(pascal_2n, base + k) - row_at(pascal_2n, base + k + 1));
    return row;
}

// Row n+1 of the s = 3 triangle from row n. The first three entries fold the
// out-of-range reflection into fixed boundary weights; from k = 3 on the full
// symmetric window applies.
std::vector<Natural> next_triangle_row(const std::vector<Natural>& cur) {
    auto c = [&](long long k) -> Natural { return row_at(cur, k); };
    std::vector<Natural> next;
    next.reserve(cur.size() + 3);
    next.push_back(c(0) + c(1) + c(2) + c(3));
    next.push_back(c(0) + 3 * c(1) + 3 * c(2) + 2 * c(3) + c(4));
    next.push_back(c(0) + 3 * c(1) + 4 * c(2) + 3 * c(3) + 2 * c(4) + c(5));
    const long long len = static_cast<long long>(cur.size()) + 3;
    for (long long k = 3; k < len; ++k)
        next.push_back(c(k - 3) + 2 * c(k - 2) + 3 * c(k - 1) + 4 * c(k) +
                       3 * c(k + 1) + 2 * c(k + 2) + c(k + 3));
    return next;
}

}  // namespace

Natural s_catalan(int s, int n) {
    check_domain(s, n);
    const SPascalRow row = s_pascal_row(s, 2 * n);
    const long long center = static_cast<long long>(s) * n;
    return row_at(row.coeffs, center) - row_at(row.coeffs, center + 1);
}

std::vector<Natural> s_catalan_sequence(int s, int n_max) {
    check_domain(s, n_max);
    std::vector<Natural> values;
    values.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<Natural> row{Natural(1)};
    values.push_back(row_at(row, 0) - row_at(row, 1));
    for (int m = 1; m <= 2 * n_max; ++m) {
        row = advance_pascal_row(row, s);
        if (m % 2 == 0) {
            const long long center = static_cast<long long>(s) * (m / 2);
            values.push_back(row_at(row, center) - row_at(row, center + 1));
        }
    }
    return values;
}

TriangleRow triangle_row_general(int s, int n) {
    check_domain(s, n);
    return row_from_pascal(s_pascal_row(s, 2 * n).coeffs, s, n);
}

TriangleRow triangle_row_direct(int n) { return triangle_row_general(3, n); }

TriangleRow triangle_row_recurrence(int n) {
    check_domain(3, n);
    std::vector<Natural> row{Natural(1)};
    for (int m = 0; m < n; ++m) row = next_triangle_row(row);
    return TriangleRow{3, n, std::move(row)};
}

std::vector<TriangleRow> triangle_rows(int s, int n_max) {
    check_domain(s, n_max);
    std::vector<TriangleRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<Natural> pascal{Natural(1)};
    rows.push_back(row_from_pascal(pascal, s, 0));
    for (int m = 1; m <= 2 * n_max; ++m) {
        pascal = advance_pascal_row(pascal, s);
        if (m % 2 == 0) rows.push_back(row_from_pascal(pascal, s, m / 2));
    }
    return rows;
}

std::vector<TriangleRow> triangle_rows_recurrence(int n_max) {
    check_domain(3, n_max);
    std::vector<TriangleRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<Natural> row{Natural(1)};
    rows.push_back(TriangleRow{3, 0, row});
    for (int n = 1; n <= n_max; ++n) {
        row = next_triangle_row(row);
        rows.push_back(TriangleRow{3, n, row});
    }
    return rows;
}

}  // namespace tricat
