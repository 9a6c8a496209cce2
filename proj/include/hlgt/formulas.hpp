#pragma once

// Expansions of v_n(x;q) * HL_lambda(x;t) and its specializations as sums over
// Gelfand-Tsetlin patterns. Every function here returns the pattern side of an
// identity; the oracle module supplies the other side.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hlgt/determinant.hpp"
#include "hlgt/gt_pattern.hpp"
#include "hlgt/oracle.hpp"
#include "hlgt/partition.hpp"
#include "hlgt/polynomial.hpp"
#include "hlgt/statistics.hpp"

namespace hlgt {

namespace detail {

inline Polynomial x_monomial(std::size_t n, const std::vector<int>& exps) {
    std::vector<Exponent> x(exps.begin(), exps.end());
    x.resize(n, 0);
    return Polynomial::x_power(x);
}

inline Polynomial x1_power(std::size_t n, int e) {
    std::vector<Exponent> x(n, 0);
    x[0] = static_cast<Exponent>(e);
    return Polynomial::x_power(x);
}

inline void require_weakly_decreasing(const Partition& lambda) {
    if (lambda.empty() || !lambda.is_weakly_decreasing())
        throw std::invalid_argument("lambda must be a nonempty weakly decreasing partition");
}

/// Memoized row coefficients keyed by (upper, lower).
class RowCoefficientCache {
public:
    const Polynomial& get(const Partition& upper, const Partition& lower) {
        auto key = std::make_pair(upper, lower);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(std::move(key), row_coefficient(upper, lower)).first;
        return it->second;
    }

private:
    std::map<std::pair<Partition, Partition>, Polynomial> cache_;
};

}  // namespace detail

/// Coefficient attached to one strict pattern in the closed-form expansion:
/// the product over consecutive row pairs of their row coefficients.
inline Polynomial pattern_coefficient(const GtPattern& t) {
    Polynomial c = Polynomial::one(0);
    for (std::size_t i = 0; i + 1 < t.size() && !c.is_zero(); ++i)
        c *= row_coefficient(t.row(i), t.row(i + 1));
    return c;
}

/// Closed form: sum over strict patterns T with top row lambda + rho of
///   prod_i ( sum_{phi} t^{l(phi)} M(r_i; phi(r_{i+1})) ) x^{m(T)}.
inline Polynomial closed_form_expansion(const Partition& lambda) {
    detail::require_weakly_decreasing(lambda);
    const std::size_t n = lambda.size();
    detail::RowCoefficientCache cache;
    Polynomial sum(n);
    for_each_gt_pattern(shifted_by_rho(lambda), true, [&](const GtPattern& t) {
        Polynomial c = Polynomial::one(0);
        for (std::size_t i = 0; i + 1 < t.size() && !c.is_zero(); ++i)
            c *= cache.get(t.row(i), t.row(i + 1));
        if (!c.is_zero())
            sum += embed(c, n) * detail::x_monomial(n, pattern_weight(t));
    });
    return sum;
}

/// Recursive form: sum over every mu below alpha = lambda + rho (strict or not)
/// of M(alpha; mu) x_1^{|alpha|-|mu|} shift(v_{n-1}(x;q) HL_{mu - rho}), with
/// the smaller Hall-Littlewood polynomials taken from the oracle.
inline Polynomial recursive_expansion(const Partition& lambda) {
    detail::require_weakly_decreasing(lambda);
    const std::size_t n = lambda.size();
    const Partition alpha = shifted_by_rho(lambda);
    const Polynomial v_smaller = weyl_denominator(n - 1, Deformation::q);
    Polynomial sum(n);
    for (const auto& mu : interleavings(alpha)) {
        const Polynomial det = row_determinant(alpha, mu);
        if (det.is_zero())
            continue;
        const Polynomial hl = n > 1 ? hall_littlewood(mu - rho(n - 1)) : Polynomial::one(0);
        sum += embed(det, n) * detail::x1_power(n, alpha.weight() - mu.weight()) *
               shift_variables(v_smaller * hl, 0, n);
    }
    return sum;
}

/// Tokuyama's formula: sum over strict T of (1-q)^{z(T)} (-q)^{l(T)} x^{m(T)}.
inline Polynomial tokuyama_expansion(const Partition& lambda) {
    detail::require_weakly_decreasing(lambda);
    const std::size_t n = lambda.size();
    const Polynomial one = Polynomial::one(n);
    const Polynomial q = Polynomial::q(n);
    Polynomial sum(n);
    for_each_gt_pattern(shifted_by_rho(lambda), true, [&](const GtPattern& t) {
        const LeaningCounts c = leaning_counts(t);
        sum += pow(one - q, c.special) * pow(-q, c.left) * detail::x_monomial(n, pattern_weight(t));
    });
    return sum;
}

/// Tokuyama's formula restated over strict mu below alpha = lambda + rho, with
/// Schur polynomials of mu - rho from the oracle.
inline Polynomial tokuyama_recursive_expansion(const Partition& lambda) {
    detail::require_weakly_decreasing(lambda);
    const std::size_t n = lambda.size();
    const Partition alpha = shifted_by_rho(lambda);
    const Polynomial v_smaller = weyl_denominator(n - 1, Deformation::q);
    const Polynomial one = Polynomial::one(n);
    const Polynomial q = Polynomial::q(n);
    Polynomial sum(n);
    for (const auto& mu : interleavings(alpha, true)) {
        unsigned left = 0, special = 0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            left += mu[i] == alpha[i];
            special += mu[i] != alpha[i] && mu[i] != alpha[i + 1];
        }
        const Polynomial s = n > 1 ? schur_polynomial(mu - rho(n - 1)) : Polynomial::one(0);
        sum += pow(-q, left) * pow(one - q, special) * detail::x1_power(n, alpha.weight() - mu.weight()) *
               shift_variables(v_smaller * s, 0, n);
    }
    return sum;
}

/// Stanley's formula for a strictly decreasing lambda (top row lambda itself):
/// sum over strict T of 2^{z(T)} x^{m(T)}.
inline Polynomial stanley_expansion(const Partition& lambda) {
    if (lambda.empty() || !lambda.is_strictly_decreasing())
        throw std::invalid_argument("stanley_expansion: lambda must be strictly decreasing");
    const std::size_t n = lambda.size();
    Polynomial sum(n);
    for_each_gt_pattern(lambda, true, [&](const GtPattern& t) {
        const Integer weight = boost::multiprecision::pow(Integer(2), static_cast<unsigned>(leaning_counts(t).special));
        sum += weight * detail::x_monomial(n, pattern_weight(t));
    });
    return sum;
}

/// True when some lower-row entry equals its upper-left parent, or two
/// adjacent entries read (right, almost-left).
inline bool has_left_or_right_almost_left(const GtPattern& t) {
    for (std::size_t i = 1; i < t.size(); ++i) {
        const auto& upper = t.row(i - 1);
        const auto& lower = t.row(i);
        for (std::size_t k = 0; k < lower.size(); ++k) {
            const PropertyLabel p = entry_properties(upper, lower, k);
            if (p.left == LeftLabel::left)
                return true;
            if (k > 0 && entry_properties(upper, lower, k - 1).right == RightLabel::right &&
                p.left == LeftLabel::almost_left)
                return true;
        }
    }
    return false;
}

/// The t = -1, q = 0 specialization restricted to strict patterns with top row
/// lambda + rho that have no left entry and no adjacent (right, almost-left)
/// pair: each such pattern contributes the product of its diagonal weights
/// times x^{m(T)}.
inline Polynomial stanley_filtered_expansion(const Partition& lambda) {
    detail::require_weakly_decreasing(lambda);
    const std::size_t n = lambda.size();
    Polynomial sum(n);
    for_each_gt_pattern(shifted_by_rho(lambda), true, [&](const GtPattern& t) {
        if (has_left_or_right_almost_left(t))
            return;
        Integer weight = 1;
        for (std::size_t i = 1; i < t.size() && weight != 0; ++i) {
            for (std::size_t k = 0; k < t.row(i).size(); ++k) {
                const Polynomial w = diagonal_weight(t.row(i - 1), t.row(i), k);
                weight *= substitute(substitute(w, Param::t, -1), Param::q, 0).to_integer();
            }
        }
        sum += weight * detail::x_monomial(n, pattern_weight(t));
    });
    return sum;
}

}  // namespace hlgt
