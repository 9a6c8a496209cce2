#pragma once

// Brute-force reference polynomials built straight from the definitions:
// sums over all n! permutations followed by exact division by the Vandermonde
// product. Obviously correct and O(n!); the variable count is capped.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hlgt/partition.hpp"
#include "hlgt/polynomial.hpp"

namespace hlgt {

inline constexpr std::size_t kDefaultOracleMaxVars = 6;

/// Cap on n for the n! sums; GT_ORACLE_NMAX overrides the default of 6.
inline std::size_t oracle_max_vars() {
    if (const char* env = std::getenv("GT_ORACLE_NMAX"); env && *env) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultOracleMaxVars;
}

inline void check_oracle_size(std::size_t n) {
    if (n > oracle_max_vars())
        throw std::length_error("oracle: n = " + std::to_string(n) + " exceeds the permutation-sum cap of " +
                                std::to_string(oracle_max_vars()) + " (set GT_ORACLE_NMAX to raise it)");
}

/// Calls f(sigma, sign) for every permutation of {0..n-1}, sigma[i] being the
/// image of i.
template <class F>
void for_each_permutation(std::size_t n, F&& f) {
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                inversions += sigma[a] > sigma[b];
        f(std::as_const(sigma), inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

enum class Deformation { none, q, t };

/// prod_{i<j} (x_i - p x_j) with p = 1, q or t. n = 0 and n = 1 give 1.
inline Polynomial weyl_denominator(std::size_t n, Deformation deform = Deformation::none) {
    Polynomial prod = Polynomial::one(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Polynomial xj = Polynomial::variable(n, j);
            if (deform == Deformation::q)
                xj = Polynomial::q(n) * xj;
            else if (deform == Deformation::t)
                xj = Polynomial::t(n) * xj;
            prod *= Polynomial::variable(n, i) - xj;
        }
    }
    return prod;
}

/// sum_sigma sgn(sigma) sigma(p).
inline Polynomial antisymmetrize(const Polynomial& p) {
    const std::size_t n = p.n_vars();
    check_oracle_size(n);
    Polynomial out(n);
    for_each_permutation(n, [&](const std::vector<std::size_t>& sigma, int sign) {
        for (const auto& [m, c] : p) {
            std::vector<Exponent> x(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                x[sigma[i]] = m.x(i);
            out.add_term(m.with_x(std::move(x)), sign * c);
        }
    });
    return out;
}

/// Divides by every (x_i - x_j), i < j, in lexicographic order of (i, j).
inline Polynomial divide_by_vandermonde(Polynomial p) {
    const std::size_t n = p.n_vars();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            p = divide_exact_binomial(p, i, j);
    return p;
}

inline Polynomial x_power(std::span<const int> parts) {
    std::vector<Exponent> x(parts.begin(), parts.end());
    return Polynomial::x_power(x);
}

/// Hall-Littlewood polynomial (without a stabilizing factor) of any tuple of
/// nonnegative integers, monotone or not:
///   sum_sigma sigma(x^kappa * prod_{i<j}(x_i - t x_j) / prod_{i<j}(x_i - x_j)).
inline Polynomial hall_littlewood(const Partition& kappa) {
    const std::size_t n = kappa.size();
    check_oracle_size(n);
    const Polynomial numerator = antisymmetrize(x_power(kappa) * weyl_denominator(n, Deformation::t));
    return divide_by_vandermonde(numerator);
}

/// Schur polynomial by the bialternant formula.
inline Polynomial schur_polynomial(const Partition& lambda) {
    if (!lambda.is_weakly_decreasing())
        throw std::invalid_argument("schur_polynomial: lambda must be weakly decreasing");
    const std::size_t n = lambda.size();
    check_oracle_size(n);
    if (n == 0)
        return Polynomial::one(0);
    return divide_by_vandermonde(antisymmetrize(x_power(lambda + rho(n))));
}

/// sum over all n! permutations of sigma(x^lambda), with multiplicity.
inline Polynomial monomial_symmetric(const Partition& lambda) {
    if (!lambda.is_weakly_decreasing())
        throw std::invalid_argument("monomial_symmetric: lambda must be weakly decreasing");
    const std::size_t n = lambda.size();
    check_oracle_size(n);
    Polynomial out(n);
    for_each_permutation(n, [&](const std::vector<std::size_t>& sigma, int) {
        std::vector<Exponent> x(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            x[sigma[i]] = static_cast<Exponent>(lambda[i]);
        out.add_term(Monomial(std::move(x)), 1);
    });
    return out;
}

}  // namespace hlgt
