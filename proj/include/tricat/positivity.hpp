#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricat/natural.hpp"

namespace tricat {

/// A symmetric 7-tap window of nonnegative weights (lambda_{-3} .. lambda_3)
/// defining the linear map  (L u)_k = sum_j lambda_j * u_{k+j}.
struct Operator7 {
    std::array<Natural, 7> lambdas{};  // lambdas[j + 3] holds lambda_j

    const Natural& at(int j) const { return lambdas[static_cast<std::size_t>(j + 3)]; }
    Natural& at(int j) { return lambdas[static_cast<std::size_t>(j + 3)]; }

    bool symmetric() const;
    bool log_concave() const;  // lambda_j^2 >= lambda_{j-1} * lambda_{j+1}, -2 <= j <= 2

    bool operator==(const Operator7&) const = default;
};

Operator7 identity_operator();

/// A nonnegative sequence over Z with finite support; indices outside the
/// stored map read as 0. Zero values are never stored, so equal sequences
/// compare equal.
class ZSequence {
public:
    ZSequence() = default;
    explicit ZSequence(std::map<long long, Natural> values);

    static ZSequence single(long long index, Natural value);
    static ZSequence from_range(long long start, std::vector<Natural> values);

    Natural at(long long k) const;
    bool empty() const { return values_.empty(); }
    long long min_index() const;  // requires non-empty
    long long max_index() const;
    const std::map<long long, Natural>& entries() const { return values_; }

    /// a_{k-1} * a_{k+1} <= a_k^2 for every k (only the support hull can
    /// produce a violation). Detects internal zeros such as (1, 0, 1).
    bool log_concave() const;

    bool operator==(const ZSequence&) const = default;

private:
    std::map<long long, Natural> values_;
};

/// Outcome of a positivity scan over a sequence range.
struct PositivityReport {
    std::string property;
    std::string range;
    bool pass = false;
    std::optional<long long> violation_index;
    std::vector<Natural> witness;  // the values in the violating window

    /// Deterministic serialization (no timing fields); big integers are
    /// emitted as bare decimal numbers.
    std::string to_json() const;
};

/// a_i * a_{i+2} >= a_{i+1}^2 for all i. Throws std::domain_error when the
/// sequence has fewer than three terms.
PositivityReport is_log_convex(std::span<const Natural> seq,
                               std::string label = "sequence");

/// a_{i-1} * a_{i+1} <= a_i^2 for all interior i. Same length requirement.
PositivityReport is_log_concave(std::span<const Natural> seq,
                                std::string label = "sequence");

/// v_k = sum_{j=-3..3} lambda_j * u_{k+j}; the support widens by at most 3
/// on each side.
ZSequence apply_operator(const Operator7& op, const ZSequence& u);

/// n-fold application; n = 0 is the identity.
ZSequence operator_power(const Operator7& op, const ZSequence& u, int n);

struct Lemma41Params {
    int trials = 1000;
    int length_max = 12;
    unsigned value_max = 60;
    std::uint64_t seed = 20250207;
};

/// Property check: pseudo-random symmetric log-concave operators applied
/// (up to three times) to pseudo-random log-concave nonnegative sequences
/// must yield log-concave sequences. Deterministic given the seed.
PositivityReport check_lemma41(const Lemma41Params& params = {});

/// Cardinality consequence of the path interpretation: for 1 <= n <= n_max,
/// count_paths(n,0)^2 <= count_paths(n+1,0) * count_paths(n-1,0), computed
/// from path counts rather than triangle entries.
PositivityReport injection_counting_check(int n_max);

}  // namespace tricat
