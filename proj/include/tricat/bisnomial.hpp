#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tricat/natural.hpp"

namespace tricat {

/// Row n of the s-Pascal triangle: coeffs[k] is the k-th coefficient of
/// (1 + x + ... + x^s)^n, for k = 0 .. s*n.
struct SPascalRow {
    int s = 1;
    int n = 0;
    std::vector<Natural> coeffs;
};

/// Builds row n iteratively from row 0 = [1], each entry being the
/// (s+1)-wide window sum over the previous row. Throws std::domain_error
/// for s < 1 or n < 0.
SPascalRow s_pascal_row(int s, int n);

/// Independent construction of the same row by expanding the polynomial
/// (1 + x + ... + x^s)^n with generic dense multiplication and binary
/// exponentiation. Shares no code with s_pascal_row; used to cross-check it.
SPascalRow s_pascal_row_by_expansion(int s, int n);

/// One step of the longitudinal recurrence, row n-1 -> row n: each entry is
/// the (s+1)-wide window sum over the previous row.
std::vector<Natural> advance_pascal_row(const std::vector<Natural>& prev, int s);

/// Single coefficient lookup; 0 for k < 0 or k > s*n.
Natural bisnomial(int s, int n, long long k);

/// The central coefficient of row 2n, i.e. the entry at k = s*n.
Natural central_bisnomial(int s, int n);

/// Both sides of the weighted-row identity
///   k * C(n,k)_s  ==  n * sum_{j=1..s} j * C(n-1,k-j)_s.
/// Requires n >= 1; the two components of the result must be equal.
std::pair<Natural, Natural> absorption_sides(int s, int n, long long k);

/// Dense polynomial product (coefficient vectors, low degree first).
std::vector<Natural> poly_mul(const std::vector<Natural>& a,
                              const std::vector<Natural>& b);

/// Polynomial power by repeated squaring.
std::vector<Natural> poly_pow(std::vector<Natural> base, unsigned exp);

/// Optional memo for s-Pascal rows keyed by (s, n). Safe for concurrent
/// callers; results are identical with and without it.
class RowCache {
public:
    const SPascalRow& row(int s, int n);
    std::size_t size() const;
    void clear();

private:
    mutable std::mutex mutex_;
    std::map<std::pair<int, int>, SPascalRow> rows_;
};

}  // namespace tricat
