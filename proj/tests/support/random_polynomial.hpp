#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "hlgt/polynomial.hpp"

namespace hlgt::testing {

/// Small random polynomial in n x-variables plus q and t; every exponent is
/// at most max_exp and there are up to max_terms terms.
inline Polynomial random_polynomial(std::mt19937& rng, std::size_t n, unsigned max_exp = 2, int max_terms = 5,
                                    int max_coeff = 4) {
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> count(0, max_terms);
    Polynomial p(n);
    const int terms = count(rng);
    for (int k = 0; k < terms; ++k) {
        std::vector<Exponent> x(n);
        for (auto& e : x)
            e = exp(rng);
        p.add_term(Monomial(std::move(x), exp(rng), exp(rng)), coeff(rng));
    }
    return p;
}

}  // namespace hlgt::testing
