#pragma once

// Per-entry labels and weights for a pair of consecutive rows. Each entry of
// the lower row is compared with its upper-left parent (left label) and its
// upper-right parent (right label). All weights are polynomials in q and t
// only, living in the 0-variable ring.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>

#include "hlgt/partition.hpp"
#include "hlgt/polynomial.hpp"

namespace hlgt {

enum class LeftLabel { left, almost_left, special };
enum class RightLabel { right, almost_right, special };

struct PropertyLabel {
    LeftLabel left;
    RightLabel right;
    friend bool operator==(const PropertyLabel&, const PropertyLabel&) = default;
};

inline std::string_view to_string(LeftLabel p) {
    switch (p) {
    case LeftLabel::left: return "l";
    case LeftLabel::almost_left: return "al";
    case LeftLabel::special: return "s";
    }
    return "?";
}

inline std::string_view to_string(RightLabel p) {
    switch (p) {
    case RightLabel::right: return "r";
    case RightLabel::almost_right: return "ar";
    case RightLabel::special: return "s";
    }
    return "?";
}

namespace detail {

inline void check_row_pair(std::span<const int> upper, std::span<const int> lower) {
    if (lower.size() + 1 != upper.size())
        throw std::invalid_argument("lower row must be one part shorter than upper row");
    for (std::size_t k = 1; k < upper.size(); ++k)
        if (upper[k - 1] <= upper[k])
            throw std::invalid_argument("upper row must be strictly decreasing");
}

}  // namespace detail

/// Labels of lower[k] against upper[k] (left) and upper[k+1] (right).
inline PropertyLabel entry_properties(std::span<const int> upper, std::span<const int> lower, std::size_t k) {
    detail::check_row_pair(upper, lower);
    if (k >= lower.size())
        throw std::out_of_range("entry index out of range");
    const int v = lower[k];
    PropertyLabel p{LeftLabel::special, RightLabel::special};
    if (v == upper[k])
        p.left = LeftLabel::left;
    else if (v == upper[k] - 1)
        p.left = LeftLabel::almost_left;
    if (v == upper[k + 1])
        p.right = RightLabel::right;
    else if (v == upper[k + 1] + 1)
        p.right = RightLabel::almost_right;
    return p;
}

/// Label weights: l -> -q, al -> t, s -> 0.
inline Polynomial label_weight(LeftLabel p) {
    switch (p) {
    case LeftLabel::left: return -Polynomial::q();
    case LeftLabel::almost_left: return Polynomial::t();
    case LeftLabel::special: break;
    }
    return Polynomial(0);
}

/// Label weights: r -> 1, ar -> -q*t, s -> 0.
inline Polynomial label_weight(RightLabel p) {
    switch (p) {
    case RightLabel::right: return Polynomial::one(0);
    case RightLabel::almost_right: return -(Polynomial::q() * Polynomial::t());
    case RightLabel::special: break;
    }
    return Polynomial(0);
}

/// Diagonal weight of lower[k]: (1-t)(1-q) unless the entry equals one of its
/// parents, plus the weights of both labels. Upper must be strictly decreasing,
/// so an entry can never equal both parents.
inline Polynomial diagonal_weight(std::span<const int> upper, std::span<const int> lower, std::size_t k) {
    const PropertyLabel p = entry_properties(upper, lower, k);
    if (p.left == LeftLabel::left && p.right == RightLabel::right)
        throw std::logic_error("entry equals both parents; upper row is not strict");
    Polynomial w = label_weight(p.left) + label_weight(p.right);
    if (p.left != LeftLabel::left && p.right != RightLabel::right) {
        const auto one = Polynomial::one(0);
        w += (one - Polynomial::t()) * (one - Polynomial::q());
    }
    return w;
}

/// Subdiagonal weight attached to the interior upper entry upper[k]
/// (1 <= k <= len(upper) - 2): right-label weight of lower[k-1] times
/// left-label weight of lower[k].
inline Polynomial subdiagonal_weight(std::span<const int> upper, std::span<const int> lower, std::size_t k) {
    detail::check_row_pair(upper, lower);
    if (k == 0 || k + 1 >= upper.size())
        throw std::out_of_range("subdiagonal weight needs an interior upper entry");
    return label_weight(entry_properties(upper, lower, k - 1).right) *
           label_weight(entry_properties(upper, lower, k).left);
}

}  // namespace hlgt
