#pragma once

// Gelfand-Tsetlin patterns: triangular arrays whose consecutive rows
// interleave, upper[k] >= lower[k] >= upper[k+1].

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hlgt/partition.hpp"

namespace hlgt {

/// True when lower is a valid row directly below upper.
inline bool interleaves(std::span<const int> upper, std::span<const int> lower) noexcept {
    if (upper.empty() || lower.size() + 1 != upper.size())
        return false;
    for (std::size_t k = 0; k < lower.size(); ++k)
        if (lower[k] > upper[k] || lower[k] < upper[k + 1])
            return false;
    return true;
}

/// Every row that can sit directly below `upper` (which only needs to be
/// weakly decreasing), in lexicographically descending order. A length-1
/// upper row yields the single empty row.
inline std::vector<Partition> interleavings(const Partition& upper, bool strict_only = false) {
    if (upper.empty() || !upper.is_weakly_decreasing())
        throw std::invalid_argument("interleavings: upper row must be nonempty and weakly decreasing");
    std::vector<Partition> out;
    const std::size_t m = upper.size() - 1;
    std::vector<int> row(m);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == m) {
            out.emplace_back(row);
            return;
        }
        for (int v = upper[k]; v >= upper[k + 1]; --v) {
            if (strict_only && k > 0 && v >= row[k - 1])
                continue;
            row[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// The set GT2(alpha) of rows below a strictly decreasing alpha.
inline std::vector<Partition> enumerate_gt2(const Partition& alpha) {
    if (alpha.empty() || !alpha.is_strictly_decreasing())
        throw std::invalid_argument("enumerate_gt2: alpha must be strictly decreasing");
    return interleavings(alpha);
}

class GtPattern {
public:
    /// Validates row lengths, monotonicity and interleaving.
    explicit GtPattern(std::vector<Partition> rows) : rows_(std::move(rows)) {
        if (rows_.empty())
            throw std::invalid_argument("GT pattern needs at least one row");
        const std::size_t n = rows_.front().size();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].size() != n - i)
                throw std::invalid_argument("GT pattern row " + std::to_string(i) + " has the wrong length");
            if (!rows_[i].is_weakly_decreasing())
                throw std::invalid_argument("GT pattern row " + std::to_string(i) + " is not weakly decreasing");
            if (i > 0 && !interleaves(rows_[i - 1], rows_[i]))
                throw std::invalid_argument("GT pattern rows " + std::to_string(i - 1) + "/" + std::to_string(i) +
                                            " violate interleaving");
        }
        if (rows_.size() != n)
            throw std::invalid_argument("GT pattern must have as many rows as top-row parts");
    }

    std::size_t size() const noexcept { return rows_.size(); }
    const Partition& row(std::size_t i) const { return rows_.at(i); }
    const Partition& top() const noexcept { return rows_.front(); }
    const std::vector<Partition>& rows() const noexcept { return rows_; }

    bool is_strict() const noexcept {
        for (const auto& r : rows_)
            if (!r.is_strictly_decreasing())
                return false;
        return true;
    }

    friend bool operator==(const GtPattern&, const GtPattern&) = default;

private:
    struct trusted_t {};
    GtPattern(trusted_t, std::vector<Partition> rows) : rows_(std::move(rows)) {}

    template <class Visitor>
    friend void for_each_gt_pattern(const Partition& top, bool strict_only, Visitor&& visit);

    std::vector<Partition> rows_;
};

/// Calls visit(const GtPattern&) for every pattern with the given top row, in
/// the same deterministic order as enumerate_gt_patterns.
template <class Visitor>
void for_each_gt_pattern(const Partition& top, bool strict_only, Visitor&& visit) {
    if (top.empty() || !top.is_weakly_decreasing())
        throw std::invalid_argument("GT pattern top row must be nonempty and weakly decreasing");
    if (strict_only && !top.is_strictly_decreasing())
        throw std::invalid_argument("strict GT patterns need a strictly decreasing top row");
    std::vector<Partition> rows{top};
    auto rec = [&](auto&& self) -> void {
        if (rows.back().size() == 1) {
            visit(GtPattern(GtPattern::trusted_t{}, rows));
            return;
        }
        for (auto& next : interleavings(rows.back(), strict_only)) {
            rows.push_back(std::move(next));
            self(self);
            rows.pop_back();
        }
    };
    rec(rec);
}

inline std::vector<GtPattern> enumerate_gt_patterns(const Partition& top, bool strict_only) {
    std::vector<GtPattern> out;
    for_each_gt_pattern(top, strict_only, [&](const GtPattern& t) { out.push_back(t); });
    return out;
}

/// m(T): successive row-sum differences, last entry |r_n|.
inline std::vector<int> pattern_weight(const GtPattern& t) {
    std::vector<int> m(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        m[i] = t.row(i).weight() - (i + 1 < t.size() ? t.row(i + 1).weight() : 0);
    return m;
}

struct LeaningCounts {
    int left = 0;
    int right = 0;
    int special = 0;
    friend bool operator==(const LeaningCounts&, const LeaningCounts&) = default;
};

/// Counts of left-leaning (equal to upper-left parent), right-leaning (equal to
/// upper-right parent) and special entries below the top row. An entry equal to
/// both parents counts once on each side.
inline LeaningCounts leaning_counts(const GtPattern& t) {
    LeaningCounts c;
    for (std::size_t i = 1; i < t.size(); ++i) {
        const auto& upper = t.row(i - 1);
        const auto& lower = t.row(i);
        for (std::size_t k = 0; k < lower.size(); ++k) {
            const bool l = lower[k] == upper[k];
            const bool r = lower[k] == upper[k + 1];
            c.left += l;
            c.right += r;
            c.special += !l && !r;
        }
    }
    return c;
}

}  // namespace hlgt
