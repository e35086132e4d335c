#include "tricat/positivity.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tricat/paths.hpp"
#include "tricat/report.hpp"

namespace tricat {

bool Operator7::symmetric() const {
    for (int j = 1; j <= 3; ++j)
        if (at(j) != at(-j)) return false;
    return true;
}

bool Operator7::log_concave() const {
    for (int j = -2; j <= 2; ++j)
        if (at(j) * at(j) < at(j - 1) * at(j + 1)) return false;
    return true;
}

Operator7 identity_operator() {
    Operator7 op;
    op.at(0) = 1;
    return op;
}

ZSequence::ZSequence(std::map<long long, Natural> values) : values_(std::move(values)) {
    for (auto it = values_.begin(); it != values_.end();) {
        if (it->second < 0) throw std::domain_error("sequence values must be nonnegative");
        if (it->second == 0)
            it = values_.erase(it);
        else
            ++it;
    }
}

ZSequence ZSequence::single(long long index, Natural value) {
    std::map<long long, Natural> m;
    m.emplace(index, std::move(value));
    return ZSequence(std::move(m));
}

ZSequence ZSequence::from_range(long long start, std::vector<Natural> values) {
    std::map<long long, Natural> m;
    for (std::size_t i = 0; i < values.size(); ++i)
        m.emplace(start + static_cast<long long>(i), std::move(values[i]));
    return ZSequence(std::move(m));
}

Natural ZSequence::at(long long k) const {
    auto it = values_.find(k);
    return it == values_.end() ? Natural(0) : it->second;
}

long long ZSequence::min_index() const {
    if (values_.empty()) throw std::domain_error("empty sequence has no support");
    return values_.begin()->first;
}

long long ZSequence::max_index() const {
    if (values_.empty()) throw std::domain_error("empty sequence has no support");
    return values_.rbegin()->first;
}

bool ZSequence::log_concave() const {
    if (values_.empty()) return true;
    for (long long k = min_index(); k <= max_index(); ++k)
        if (at(k - 1) * at(k + 1) > at(k) * at(k)) return false;
    return true;
}

namespace {

std::string json_natural_array(const std::vector<Natural>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += values[i].str();
    }
    out += ']';
    return out;
}

PositivityReport make_pass(std::string property, std::string range) {
    PositivityReport r;
    r.property = std::move(property);
    r.range = std::move(range);
    r.pass = true;
    return r;
}

PositivityReport make_fail(std::string property, std::string range, long long index,
                           std::vector<Natural> witness) {
    PositivityReport r;
    r.property = std::move(property);
    r.range = std::move(range);
    r.pass = false;
    r.violation_index = index;
    r.witness = std::move(witness);
    return r;
}

}  // namespace

std::string PositivityReport::to_json() const {
    std::ostringstream out;
    out << "{\"property\":\"" << json_escape(property) << "\",\"range\":\""
        << json_escape(range) << "\",\"verdict\":\"" << (pass ? "pass" : "fail")
        << "\",\"violation_index\":";
    if (violation_index)
        out << *violation_index;
    else
        out << "null";
    out << ",\"witness\":" << json_natural_array(witness) << "}";
    return out.str();
}

PositivityReport is_log_convex(std::span<const Natural> seq, std::string label) {
    if (seq.size() < 3) throw std::domain_error("log-convexity needs at least 3 terms");
    std::ostringstream range;
    range << label << ", indices 0.." << seq.size() - 1;
    for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
        if (seq[i] * seq[i + 2] < seq[i + 1] * seq[i + 1])
            return make_fail("log-convex", range.str(), static_cast<long long>(i),
                             {seq[i], seq[i + 1], seq[i + 2]});
    }
    return make_pass("log-convex", range.str());
}

PositivityReport is_log_concave(std::span<const Natural> seq, std::string label) {
    if (seq.size() < 3) throw std::domain_error("log-concavity needs at least 3 terms");
    std::ostringstream range;
    range << label << ", indices 0.." << seq.size() - 1;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        if (seq[i - 1] * seq[i + 1] > seq[i] * seq[i])
            return make_fail("log-concave", range.str(), static_cast<long long>(i),
                             {seq[i - 1], seq[i], seq[i + 1]});
    }
    return make_pass("log-concave", range.str());
}

ZSequence apply_operator(const Operator7& op, const ZSequence& u) {
    if (u.empty()) return {};
    std::map<long long, Natural> out;
    const long long lo = u.min_index() - 3;
    const long long hi = u.max_index() + 3;
    for (long long k = lo; k <= hi; ++k) {
        Natural v = 0;
        for (int j = -3; j <= 3; ++j) {
            const Natural& w = op.at(j);
            if (w == 0) continue;
            Natural term = u.at(k + j);
            if (term != 0) v += w * term;
        }
        if (v != 0) out.emplace(k, std::move(v));
    }
    return ZSequence(std::move(out));
}

ZSequence operator_power(const Operator7& op, const ZSequence& u, int n) {
    if (n < 0) throw std::domain_error("operator power needs n >= 0");
    ZSequence result = u;
    for (int i = 0; i < n; ++i) result = apply_operator(op, result);
    return result;
}

namespace {

// Deterministic bounded draws straight from the engine; distribution
// adapters are implementation-defined and would unpin the trial stream.
struct TrialRng {
    std::mt19937_64 engine;

    explicit TrialRng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t below(std::uint64_t bound) { return engine() % bound; }

    double unit() { return static_cast<double>(below(1000000) + 1) / 1000001.0; }
};

// Symmetric positive log-concave window of half-width m <= 3: a peak value
// with outward non-increasing ratios, rounded and re-checked exactly.
Operator7 random_operator(TrialRng& rng, unsigned value_max) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const int m = static_cast<int>(rng.below(4));
        const double peak = 1.0 + static_cast<double>(rng.below(value_max));
        double ratio = 0.25 + 0.75 * rng.unit();
        double value = peak;
        Operator7 op;
        op.at(0) = Natural(static_cast<long long>(std::llround(peak)));
        for (int j = 1; j <= m; ++j) {
            value *= ratio;
            long long rounded = std::llround(value);
            if (rounded < 1) rounded = 1;
            op.at(j) = Natural(rounded);
            op.at(-j) = Natural(rounded);
            ratio *= 0.25 + 0.75 * rng.unit();  // ratios stay non-increasing
        }
        if (op.symmetric() && op.log_concave()) return op;
    }
    throw std::runtime_error("operator generation failed to satisfy constraints");
}

// Positive log-concave sequence with contiguous support: a discrete
// Gaussian-like bump, rounded and re-checked exactly.
ZSequence random_log_concave_sequence(TrialRng& rng, int length_max, unsigned value_max) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const int length = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(length_max)));
        const long long start = static_cast<long long>(rng.below(9)) - 4;
        const double peak_pos = static_cast<double>(rng.below(static_cast<std::uint64_t>(length)));
        const double amplitude = 1.0 + static_cast<double>(rng.below(value_max));
        const double sharpness = 0.02 + 0.5 * rng.unit();
        std::vector<Natural> values;
        values.reserve(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) {
            const double d = static_cast<double>(i) - peak_pos;
            long long v = std::llround(amplitude * std::exp(-sharpness * d * d));
            if (v < 1) v = 1;
            values.push_back(Natural(v));
        }
        ZSequence seq = ZSequence::from_range(start, std::move(values));
        if (seq.log_concave()) return seq;
    }
    throw std::runtime_error("sequence generation failed to satisfy constraints");
}

}  // namespace

PositivityReport check_lemma41(const Lemma41Params& params) {
    if (params.trials < 1) throw std::domain_error("trials must be >= 1");
    if (params.length_max < 1 || params.value_max < 1)
        throw std::domain_error("length_max and value_max must be >= 1");
    std::ostringstream range;
    range << params.trials << " trials, length_max=" << params.length_max
          << ", value_max=" << params.value_max << ", seed=" << params.seed;
    TrialRng rng(params.seed);
    for (int trial = 0; trial < params.trials; ++trial) {
        const Operator7 op = random_operator(rng, params.value_max);
        ZSequence seq = random_log_concave_sequence(rng, params.length_max, params.value_max);
        for (int power = 1; power <= 3; ++power) {
            seq = apply_operator(op, seq);
            if (!seq.log_concave()) {
                std::vector<Natural> witness;
                for (int j = -3; j <= 3; ++j) witness.push_back(op.at(j));
                return make_fail("operator preserves log-concavity", range.str(), trial,
                                 std::move(witness));
            }
        }
    }
    return make_pass("operator preserves log-concavity", range.str());
}

PositivityReport injection_counting_check(int n_max) {
    if (n_max < 1) throw std::domain_error("n_max must be >= 1");
    std::ostringstream range;
    range << "path counts c(n,0), n in 1.." << n_max;
    std::vector<Natural> counts;
    counts.reserve(static_cast<std::size_t>(n_max) + 2);
    for (int n = 0; n <= n_max + 1; ++n) counts.push_back(count_paths(n, 0));
    for (int n = 1; n <= n_max; ++n) {
        const Natural lhs = counts[static_cast<std::size_t>(n)] * counts[static_cast<std::size_t>(n)];
        const Natural rhs = counts[static_cast<std::size_t>(n + 1)] * counts[static_cast<std::size_t>(n - 1)];
        if (lhs > rhs)
            return make_fail("squared path count bounded by neighbours", range.str(), n,
                             {counts[static_cast<std::size_t>(n - 1)],
                              counts[static_cast<std::size_t>(n)],
                              counts[static_cast<std::size_t>(n + 1)]});
    }
    return make_pass("squared path count bounded by neighbours", range.str());
}

}  // namespace tricat
