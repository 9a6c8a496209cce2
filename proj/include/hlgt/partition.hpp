#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlgt {

/// A finite tuple of nonnegative integers with explicit length; trailing zeros
/// are significant. Monotonicity is not enforced: raised tuples and mu - rho
/// can have ascents, so it is exposed through predicates instead.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0)
                throw std::invalid_argument("partition parts must be nonnegative");
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    operator std::span<const int>() const noexcept { return parts_; }

    /// |lambda|
    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool is_weakly_decreasing() const noexcept {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                return false;
        return true;
    }

    bool is_strictly_decreasing() const noexcept {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] <= parts_[i])
                return false;
        return true;
    }

    /// Drops the first k parts.
    Partition tail(std::size_t k = 1) const {
        if (k > parts_.size())
            throw std::out_of_range("partition tail past the end");
        return Partition(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(k), parts_.end()));
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// The staircase (n-1, n-2, ..., 1, 0).
inline Partition rho(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("rho: n must be positive");
    std::vector<int> parts(n);
    for (std::size_t i = 0; i < n; ++i)
        parts[i] = static_cast<int>(n - 1 - i);
    return Partition(std::move(parts));
}

inline Partition operator+(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partition sum needs equal lengths");
    std::vector<int> parts(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        parts[i] = a[i] + b[i];
    return Partition(std::move(parts));
}

/// Componentwise a - b; throws if a part would go negative.
inline Partition operator-(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partition difference needs equal lengths");
    std::vector<int> parts(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        parts[i] = a[i] - b[i];
    return Partition(std::move(parts));
}

inline Partition concat(const Partition& a, const Partition& b) {
    std::vector<int> parts(a.parts());
    parts.insert(parts.end(), b.begin(), b.end());
    return Partition(std::move(parts));
}

/// lambda + rho for a weakly decreasing lambda; the usual top row.
inline Partition shifted_by_rho(const Partition& lambda) {
    if (lambda.empty() || !lambda.is_weakly_decreasing())
        throw std::invalid_argument("expected a nonempty weakly decreasing partition");
    return lambda + rho(lambda.size());
}

inline std::string to_string(const Partition& p, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(p[i]);
    }
    return out;
}

/// All weakly decreasing partitions of the given length with parts <= max_part,
/// lexicographically ascending. Generated directly, not by filtering.
inline std::vector<Partition> weakly_decreasing_partitions(std::size_t length, int max_part) {
    std::vector<Partition> out;
    std::vector<int> parts(length);
    auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
        if (i == length) {
            out.emplace_back(parts);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            parts[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, max_part);
    return out;
}

}  // namespace hlgt
