#pragma once

// Wall-clock comparison of the permutation-sum oracle against the
// pattern-sum closed form, both producing v_n(x;q) * HL_lambda(x;t).

#include <chrono>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlgt/formulas.hpp"
#include "hlgt/oracle.hpp"
#include "hlgt/partition.hpp"

namespace hlgt {

struct BenchRow {
    std::size_t n = 0;
    Partition lambda;
    std::string mode;  // "oracle" or "closed"
    std::size_t terms = 0;
    double seconds = 0.0;  // mean over repeats
};

namespace detail {

template <class F>
BenchRow time_mode(std::size_t n, const Partition& lambda, std::string mode, unsigned repeats, F&& compute) {
    std::size_t terms = 0;
    std::chrono::steady_clock::duration total{};
    for (unsigned r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const Polynomial p = compute();
        total += std::chrono::steady_clock::now() - start;
        terms = p.size();
    }
    return {n, lambda, std::move(mode), terms, std::chrono::duration<double>(total).count() / repeats};
}

}  // namespace detail

inline std::vector<BenchRow> run_bench(std::span<const std::size_t> sizes, int max_part, unsigned repeats) {
    if (repeats == 0)
        throw std::invalid_argument("bench: repeats must be positive");
    if (max_part < 0)
        throw std::invalid_argument("bench: max-part must be nonnegative");
    for (auto n : sizes) {
        if (n == 0)
            throw std::invalid_argument("bench: sizes must be positive");
        check_oracle_size(n);
    }
    std::vector<BenchRow> rows;
    for (auto n : sizes) {
        for (const auto& lambda : weakly_decreasing_partitions(n, max_part)) {
            rows.push_back(detail::time_mode(n, lambda, "oracle", repeats, [&] {
                return weyl_denominator(n, Deformation::q) * hall_littlewood(lambda);
            }));
            rows.push_back(
                detail::time_mode(n, lambda, "closed", repeats, [&] { return closed_form_expansion(lambda); }));
        }
    }
    return rows;
}

/// Header n,lambda,mode,terms,seconds; lambda parts joined by '-'.
inline void write_bench_csv(std::ostream& os, std::span<const BenchRow> rows) {
    os << "n,lambda,mode,terms,seconds\n";
    for (const auto& r : rows) {
        os << r.n << ',' << to_string(r.lambda, '-') << ',' << r.mode << ',' << r.terms << ','
           << std::scientific << std::setprecision(6) << r.seconds << std::defaultfloat << '\n';
    }
}

inline void write_bench_table(std::ostream& os, std::span<const BenchRow> rows) {
    os << std::left << std::setw(4) << "n" << std::setw(14) << "lambda" << std::setw(8) << "mode" << std::right
       << std::setw(8) << "terms" << std::setw(14) << "seconds" << '\n';
    for (const auto& r : rows) {
        os << std::left << std::setw(4) << r.n << std::setw(14) << to_string(r.lambda) << std::setw(8) << r.mode
           << std::right << std::setw(8) << r.terms << std::setw(14) << std::scientific << std::setprecision(3)
           << r.seconds << std::defaultfloat << '\n';
    }
}

}  // namespace hlgt
