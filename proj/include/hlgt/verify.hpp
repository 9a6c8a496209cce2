#pragma once

// Exhaustive checking of the exact identities over a grid of partitions.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hlgt/formulas.hpp"
#include "hlgt/oracle.hpp"
#include "hlgt/partition.hpp"
#include "hlgt/polynomial.hpp"
#include "hlgt/raising.hpp"

namespace hlgt {

enum class Suite { main, recursive, tokuyama, stanley, monomial, raising, all };

inline std::string_view to_string(Suite s) {
    switch (s) {
    case Suite::main: return "main";
    case Suite::recursive: return "recursive";
    case Suite::tokuyama: return "tokuyama";
    case Suite::stanley: return "stanley";
    case Suite::monomial: return "monomial";
    case Suite::raising: return "raising";
    case Suite::all: return "all";
    }
    return "?";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
    for (auto s : {Suite::main, Suite::recursive, Suite::tokuyama, Suite::stanley, Suite::monomial, Suite::raising,
                   Suite::all})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

struct CaseResult {
    Partition lambda;
    std::string identity;
    bool passed = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<CaseResult> cases;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    double wall_time = 0.0;

    bool ok() const noexcept { return failed == 0; }

    nlohmann::json to_json() const {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : cases)
            cs.push_back({{"lambda", c.lambda.parts()}, {"identity", c.identity}, {"pass", c.passed}});
        return {{"suite", suite}, {"cases", std::move(cs)}, {"total", total},
                {"passed", passed}, {"failed", failed}, {"wall_time", wall_time}};
    }
};

namespace detail {

/// Lazily computed pieces shared by the identities of one lambda.
class IdentityContext {
public:
    explicit IdentityContext(Partition lambda) : lambda_(std::move(lambda)), n_(lambda_.size()) {}

    const Partition& lambda() const noexcept { return lambda_; }
    std::size_t n() const noexcept { return n_; }

    const Polynomial& hl() { return get(hl_, [&] { return hall_littlewood(lambda_); }); }
    const Polynomial& schur() { return get(schur_, [&] { return schur_polynomial(lambda_); }); }
    const Polynomial& v_q() { return get(v_q_, [&] { return weyl_denominator(n_, Deformation::q); }); }
    const Polynomial& closed() { return get(closed_, [&] { return closed_form_expansion(lambda_); }); }
    const Polynomial& hl_at_minus_one() {
        return get(hl_m1_, [&] { return substitute(hl(), Param::t, -1); });
    }

private:
    template <class F>
    static const Polynomial& get(std::optional<Polynomial>& slot, F&& make) {
        if (!slot)
            slot = make();
        return *slot;
    }

    Partition lambda_;
    std::size_t n_;
    std::optional<Polynomial> hl_, schur_, v_q_, closed_, hl_m1_;
};

inline bool includes(Suite requested, Suite s) { return requested == Suite::all || requested == s; }

}  // namespace detail

/// Checks every identity of `suite` for one weakly decreasing lambda.
inline std::vector<CaseResult> check_identities(const Partition& lambda, Suite suite) {
    detail::IdentityContext ctx(lambda);
    const std::size_t n = lambda.size();
    std::vector<CaseResult> out;
    auto record = [&](std::string name, bool ok) { out.push_back({lambda, std::move(name), ok}); };

    if (detail::includes(suite, Suite::main))
        record("closed_form", ctx.closed() == ctx.v_q() * ctx.hl());

    if (detail::includes(suite, Suite::recursive))
        record("recursive", recursive_expansion(lambda) == ctx.v_q() * ctx.hl());

    if (detail::includes(suite, Suite::tokuyama)) {
        const Polynomial tok = tokuyama_expansion(lambda);
        record("tokuyama", tok == ctx.v_q() * ctx.schur());
        record("tokuyama_t0_reduction", substitute(ctx.closed(), Param::t, 0) == tok);
        record("tokuyama_recursive", tokuyama_recursive_expansion(lambda) == ctx.v_q() * ctx.schur());
    }

    if (detail::includes(suite, Suite::stanley)) {
        const Polynomial lhs = substitute(substitute(ctx.closed(), Param::q, -1), Param::t, 0);
        record("stanley_q-1_t0", lhs == substitute(ctx.v_q(), Param::q, -1) * ctx.schur());
        if (lambda.is_strictly_decreasing())
            record("stanley_strict", stanley_expansion(lambda) == ctx.hl_at_minus_one());
        record("stanley_filtered", stanley_filtered_expansion(lambda) == x_power(rho(n)) * ctx.hl_at_minus_one());
    }

    if (detail::includes(suite, Suite::monomial)) {
        const Polynomial m = monomial_symmetric(lambda);
        record("monomial_oracle", substitute(ctx.hl(), Param::t, 1) == m);
        record("monomial_closed", substitute(ctx.closed(), Param::t, 1) == ctx.v_q() * m);
    }

    if (detail::includes(suite, Suite::raising)) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (lambda[i] != lambda[i + 1] + 1)
                continue;
            const Polynomial raised = hall_littlewood(Partition(apply_raising(i, lambda)));
            record("raising_shift[" + std::to_string(i + 1) + " " + std::to_string(i + 2) + "]",
                   raised == Polynomial::t(n) * ctx.hl());
        }
    }
    return out;
}

/// Every weakly decreasing lambda of length 1..n_max with parts <= max_part,
/// ordered by length and then lexicographically.
inline std::vector<Partition> verification_grid(std::size_t n_max, int max_part) {
    std::vector<Partition> grid;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (auto& p : weakly_decreasing_partitions(n, max_part))
            grid.push_back(std::move(p));
    return grid;
}

/// Runs check_identities over a list of partitions on `threads` workers. The
/// report order follows the input order regardless of scheduling.
inline VerifyReport verify_partitions(const std::vector<Partition>& grid, Suite suite, unsigned threads = 1) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::vector<CaseResult>> results(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                results[i] = check_identities(grid[i], suite);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k)
            pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    VerifyReport report;
    report.suite = std::string(to_string(suite));
    for (auto& r : results)
        for (auto& c : r)
            report.cases.push_back(std::move(c));
    report.total = report.cases.size();
    report.passed = static_cast<std::size_t>(
        std::count_if(report.cases.begin(), report.cases.end(), [](const CaseResult& c) { return c.passed; }));
    report.failed = report.total - report.passed;
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline VerifyReport run_verify(std::size_t n_max, int max_part, Suite suite, unsigned threads = 1) {
    if (n_max == 0 || max_part < 0)
        throw std::invalid_argument("verify: need n >= 1 and max-part >= 0");
    check_oracle_size(n_max);
    return verify_partitions(verification_grid(n_max, max_part), suite, threads);
}

}  // namespace hlgt
