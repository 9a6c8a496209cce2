#pragma once

// Raising operators [i j]: decrement part i, increment part j. Positions are
// 0-based here, so the elementary operator on parts i and i+1 is written
// apply_raising(i, ...).

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "hlgt/partition.hpp"

namespace hlgt {

using Tuple = std::vector<int>;

inline Tuple apply_raising(std::size_t i, std::size_t j, std::span<const int> kappa) {
    if (i > j || j >= kappa.size())
        throw std::out_of_range("raising operator positions out of range");
    Tuple out(kappa.begin(), kappa.end());
    --out[i];
    ++out[j];
    return out;
}

/// The elementary operator on parts i and i+1.
inline Tuple apply_raising(std::size_t i, std::span<const int> kappa) {
    if (i + 1 >= kappa.size())
        throw std::out_of_range("elementary raising index out of range");
    return apply_raising(i, i + 1, kappa);
}

/// Sum of (j+1) * (image_j - source_j). Each elementary operator adds exactly
/// one, so this is the length of any decomposition into elementary operators.
inline int raising_length(std::span<const int> source, std::span<const int> image) {
    if (source.size() != image.size())
        throw std::invalid_argument("raising_length: size mismatch");
    int s = 0;
    for (std::size_t j = 0; j < source.size(); ++j)
        s += static_cast<int>(j + 1) * (image[j] - source[j]);
    return s;
}

struct RaisingOperator {
    Partition result;  // image of the source tuple
    int length = 0;
    friend bool operator==(const RaisingOperator&, const RaisingOperator&) = default;
};

/// Closure of {Id} under "raise any consecutive pair that differs by exactly 2".
/// Operators are identified by their image.
class RaisingClosure {
public:
    RaisingClosure(Partition source, std::vector<RaisingOperator> elements)
        : source_(std::move(source)), elements_(std::move(elements)) {}

    const Partition& source() const noexcept { return source_; }
    const std::vector<RaisingOperator>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool contains(const Partition& image) const {
        return std::any_of(elements_.begin(), elements_.end(),
                           [&](const RaisingOperator& op) { return op.result == image; });
    }

private:
    Partition source_;
    std::vector<RaisingOperator> elements_;
};

/// Breadth-first closure from the identity. BFS depth must agree with the
/// weighted-sum length of each image; a mismatch is a logic error.
inline RaisingClosure raising_closure(const Partition& alpha) {
    if (!alpha.is_strictly_decreasing())
        throw std::invalid_argument("raising_closure: alpha must be strictly decreasing");
    std::vector<RaisingOperator> elements{{alpha, 0}};
    std::set<Partition> seen{alpha};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const RaisingOperator current = elements[frontier.front()];
        frontier.pop_front();
        const auto& img = current.result;
        for (std::size_t i = 0; i + 1 < img.size(); ++i) {
            if (img[i] != img[i + 1] + 2)
                continue;
            Partition next(apply_raising(i, img));
            if (!seen.insert(next).second)
                continue;
            const int depth = current.length + 1;
            if (raising_length(alpha, next) != depth)
                throw std::logic_error("raising closure: BFS depth disagrees with weighted length");
            elements.push_back({std::move(next), depth});
            frontier.push_back(elements.size() - 1);
        }
    }
    return RaisingClosure(alpha, std::move(elements));
}

}  // namespace hlgt
