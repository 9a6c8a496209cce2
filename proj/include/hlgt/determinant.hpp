#pragma once

// The tridiagonal determinant attached to a strict row and a row beneath it:
// diagonal entries are the diagonal weights of the lower row, superdiagonal
// entries are 1, subdiagonal entries are the weights of the interior upper
// entries.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hlgt/gt_pattern.hpp"
#include "hlgt/partition.hpp"
#include "hlgt/polynomial.hpp"
#include "hlgt/raising.hpp"
#include "hlgt/statistics.hpp"

namespace hlgt {

/// Determinant for (alpha; mu). Returns 1 for a length-1 alpha and 0 when mu
/// is not a valid row below alpha; labels are never computed in that case.
///
/// Evaluated with the top-row expansion
///   M(alpha; mu) = w(mu_1) M(alpha', mu') - d(alpha_2) M(alpha'', mu'')
/// where ' drops the first part; run from the bottom up.
inline Polynomial row_determinant(const Partition& alpha, std::span<const int> mu) {
    if (alpha.empty() || !alpha.is_strictly_decreasing())
        throw std::invalid_argument("row_determinant: alpha must be strictly decreasing");
    if (mu.size() + 1 != alpha.size())
        throw std::invalid_argument("row_determinant: mu must be one part shorter than alpha");
    const std::size_t m = mu.size();
    if (m == 0)
        return Polynomial::one(0);
    if (!interleaves(alpha, mu))
        return Polynomial(0);

    // tail[k] = determinant of the trailing block starting at row k.
    std::vector<Polynomial> tail(m + 2, Polynomial::one(0));
    tail[m - 1] = diagonal_weight(alpha, mu, m - 1);
    for (std::size_t k = m - 1; k-- > 0;) {
        tail[k] = diagonal_weight(alpha, mu, k) * tail[k + 1] - subdiagonal_weight(alpha, mu, k + 1) * tail[k + 2];
    }
    return tail[0];
}

/// Sum over raising operators phi in the closure of `lower` of
/// t^{length(phi)} * M(upper; phi(lower)).
inline Polynomial row_coefficient(const Partition& upper, const Partition& lower) {
    Polynomial sum(0);
    for (const auto& op : raising_closure(lower)) {
        auto det = row_determinant(upper, op.result);
        if (det.is_zero())
            continue;
        sum += pow(Polynomial::t(), static_cast<unsigned>(op.length)) * det;
    }
    return sum;
}

}  // namespace hlgt
