#include "tricat/bisnomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricat {

namespace {

void check_domain(int s, int n) {
    if (s < 1) throw std::domain_error("s must be >= 1 (s = 0 degenerates the alphabet)");
    if (n < 0) throw std::domain_error("n must be >= 0");
}

}  // namespace

std::vector<Natural> advance_pascal_row(const std::vector<Natural>& prev, int s) {
    std::vector<Natural> next(prev.size() + static_cast<std::size_t>(s));
    for (std::size_t k = 0; k < next.size(); ++k) {
        Natural acc = 0;
        std::size_t lo = k >= static_cast<std::size_t>(s) ? k - static_cast<std::size_t>(s) : 0;
        std::size_t hi = std::min(k, prev.size() - 1);
        for (std::size_t i = lo; i <= hi; ++i) acc += prev[i];
        next[k] = std::move(acc);
    }
    return next;
}

SPascalRow s_pascal_row(int s, int n) {
    check_domain(s, n);
    std::vector<Natural> coeffs{Natural(1)};
    for (int m = 1; m <= n; ++m) coeffs = advance_pascal_row(coeffs, s);
    return SPascalRow{s, n, std::move(coeffs)};
}

std::vector<Natural> poly_mul(const std::vector<Natural>& a,
                              const std::vector<Natural>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Natural> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Natural> poly_pow(std::vector<Natural> base, unsigned exp) {
    std::vector<Natural> result{Natural(1)};
    while (exp > 0) {
        if (exp & 1u) result = poly_mul(result, base);
        exp >>= 1u;
        if (exp > 0) base = poly_mul(base, base);
    }
    return result;
}

SPascalRow s_pascal_row_by_expansion(int s, int n) {
    check_domain(s, n);
    std::vector<Natural> ones(static_cast<std::size_t>(s) + 1, Natural(1));
    auto coeffs = poly_pow(std::move(ones), static_cast<unsigned>(n));
    return SPascalRow{s, n, std::move(coeffs)};
}

Natural bisnomial(int s, int n, long long k) {
    check_domain(s, n);
    if (k < 0 || k > static_cast<long long>(s) * n) return 0;
    return s_pascal_row(s, n).coeffs[static_cast<std::size_t>(k)];
}

Natural central_bisnomial(int s, int n) {
    check_domain(s, n);
    return bisnomial(s, 2 * n, static_cast<long long>(s) * n);
}

std::pair<Natural, Natural> absorption_sides(int s, int n, long long k) {
    check_domain(s, n);
    if (n < 1) throw std::domain_error("absorption requires n >= 1");
    Natural lhs = Natural(k) * bisnomial(s, n, k);
    const SPascalRow prev = s_pascal_row(s, n - 1);
    auto prev_at = [&](long long i) -> Natural {
        if (i < 0 || i >= static_cast<long long>(prev.coeffs.size())) return 0;
        return prev.coeffs[static_cast<std::size_t>(i)];
    };
    Natural rhs = 0;
    for (int j = 1; j <= s; ++j) rhs += Natural(j) * prev_at(k - j);
    rhs *= n;
    return {std::move(lhs), std::move(rhs)};
}

const SPascalRow& RowCache::row(int s, int n) {
    check_domain(s, n);
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(s, n);
    auto it = rows_.find(key);
    if (it == rows_.end()) it = rows_.emplace(key, s_pascal_row(s, n)).first;
    return it->second;
}

std::size_t RowCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return rows_.size();
}

void RowCache::clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    rows_.clear();
}

}  // namespace tricat
