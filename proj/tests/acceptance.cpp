// Acceptance gate: every check is an exact polynomial equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hlgt/bench.hpp"
#include "hlgt/determinant.hpp"
#include "hlgt/formulas.hpp"
#include "hlgt/oracle.hpp"
#include "hlgt/raising.hpp"
#include "hlgt/verify.hpp"
#include "support/laplace.hpp"
#include "support/table.hpp"

using namespace hlgt;

namespace {

/// n in {1,2,3} with lambda_1 <= 4, plus n = 4 with lambda_1 <= 3.
std::vector<Partition> acceptance_grid() {
    auto grid = verification_grid(3, 4);
    for (auto& p : weakly_decreasing_partitions(4, 3))
        grid.push_back(std::move(p));
    return grid;
}

/// Collects failure messages for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }
};

void all_pass(const VerifyReport& r, Check& c) {
    for (const auto& cs : r.cases)
        c.expect(cs.passed, cs.identity + " at (" + to_string(cs.lambda) + ")");
}

void criterion_suite(Check& c, Suite suite, const std::vector<std::string>& identities) {
    const auto report = verify_partitions(acceptance_grid(), suite);
    all_pass(report, c);
    std::map<std::string, std::size_t> seen;
    for (const auto& cs : report.cases)
        ++seen[cs.identity];
    for (const auto& id : identities)
        c.expect(seen[id] == acceptance_grid().size(), id + " did not run on every grid partition");
}

void criterion_1(Check& c) { criterion_suite(c, Suite::main, {"closed_form"}); }

void criterion_2(Check& c) {
    criterion_suite(c, Suite::recursive, {"recursive"});
    // The recursion must actually meet non-strict rows below lambda + rho.
    bool non_strict = false;
    for (const auto& mu : interleavings(shifted_by_rho({1, 0, 0})))
        non_strict |= !mu.is_strictly_decreasing() && !row_determinant({3, 1, 0}, mu).is_zero();
    c.expect(non_strict, "no non-strict row with nonzero determinant was exercised");
}

void criterion_3(Check& c) {
    criterion_suite(c, Suite::tokuyama, {"tokuyama", "tokuyama_t0_reduction", "tokuyama_recursive"});
}

void criterion_4(Check& c) {
    const auto grid = acceptance_grid();
    const auto report = verify_partitions(grid, Suite::stanley);
    for (const auto& cs : report.cases)
        if (cs.identity != "stanley_strict")
            c.expect(cs.passed, cs.identity + " at (" + to_string(cs.lambda) + ")");
    // (b) on its own grid: strict lambda, n <= 4, lambda_1 <= 5.
    std::size_t strict_cases = 0;
    for (const auto& lambda : hlgt::testing::strict_partitions(4, 5)) {
        ++strict_cases;
        c.expect(stanley_expansion(lambda) == substitute(hall_littlewood(lambda), Param::t, -1),
                 "stanley_strict at (" + to_string(lambda) + ")");
    }
    c.expect(strict_cases > 0, "empty strict grid");
}

void criterion_5(Check& c) { criterion_suite(c, Suite::monomial, {"monomial_oracle", "monomial_closed"}); }

void criterion_6(Check& c) {
    const auto report = verify_partitions(acceptance_grid(), Suite::raising);
    all_pass(report, c);
    c.expect(report.total > 0, "no partition with a unit gap on the grid");
}

void criterion_7(Check& c) {
    const auto one = Polynomial::one(0), q = Polynomial::q(), t = Polynomial::t();
    c.expect(row_determinant({3, 1, 0}, std::vector<int>{2, 0}) == one - q + t - q * t + q * t * t,
             "M((3,1,0);(2,0))");
    c.expect(row_coefficient({3, 1, 0}, {2, 0}) == (one - q) * (one + t), "row-1 coefficient");
    const auto expected = (one - q) * (one - q) * (one + t);
    c.expect(pattern_coefficient(GtPattern({{3, 1, 0}, {2, 0}, {1}})) == expected, "pattern coefficient");
    const std::vector<Exponent> e{2, 1, 1};
    c.expect(coefficient_of(weyl_denominator(3, Deformation::q) * hall_littlewood({1, 0, 0}), e) == expected,
             "coefficient of x1^2 x2 x3 in v_3 HL_(1,0,0)");
    c.expect(coefficient_of(closed_form_expansion({1, 0, 0}), e) == expected,
             "coefficient of x1^2 x2 x3 in the closed form");
}

void criterion_8(Check& c) {
    const Partition alpha{6, 4, 3, 1};
    const auto omega = raising_closure(alpha);
    // Id, [1 2], [1 3], [2 4], [3 4], [1 2][3 4] with weighted-sum lengths.
    const std::vector<std::pair<Tuple, int>> expected{
        {alpha.parts(), 0},
        {apply_raising(0, 1, alpha), 1},
        {apply_raising(0, 2, alpha), 2},
        {apply_raising(1, 3, alpha), 2},
        {apply_raising(2, 3, alpha), 1},
        {apply_raising(2, 3, apply_raising(0, 1, alpha)), 2},
    };
    c.expect(omega.size() == 6, "closure size " + std::to_string(omega.size()));
    for (const auto& [image, length] : expected) {
        const Partition p(image);
        bool found = false;
        for (const auto& op : omega)
            if (op.result == p) {
                found = true;
                c.expect(op.length == length, "length of (" + to_string(p) + ")");
                c.expect(raising_length(alpha, p) == length, "weighted length of (" + to_string(p) + ")");
            }
        c.expect(found, "missing image (" + to_string(p) + ")");
    }
}

void criterion_9(Check& c) {
    for (const auto& row : hlgt::testing::w_table()) {
        const auto r = hlgt::testing::check_w_row(row);
        const std::string name = "w(" + std::string(to_string(row.left)) + "," + std::string(to_string(row.right)) + ")";
        c.expect(r.instances > 0, name + " has no instance");
        c.expect(r.mismatches == 0, name + " mismatch");
    }
    const auto d = hlgt::testing::d_table();
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto r = hlgt::testing::check_d_row(d[i]);
        c.expect(r.instances > 0, "d row " + std::to_string(i + 1) + " has no instance");
        c.expect(r.mismatches == 0, "d row " + std::to_string(i + 1) + " mismatch");
    }
    const auto one = Polynomial::one(0), q = Polynomial::q(), t = Polynomial::t();
    const std::vector<int> upper{5, 3, 1}, lower{4, 3};
    c.expect(diagonal_weight(upper, lower, 0) == one - q, "w(4) in the 5 3 1 / 4 3 segment");
    c.expect(diagonal_weight(upper, lower, 1) == -q, "w(3) in the 5 3 1 / 4 3 segment");
    c.expect(subdiagonal_weight(upper, lower, 1) == q * q * t, "d(3) in the 5 3 1 / 4 3 segment");
}

void criterion_10(Check& c) {
    for (const auto& alpha : hlgt::testing::strict_partitions(5, 6)) {
        std::size_t product = 1;
        for (std::size_t k = 0; k + 1 < alpha.size(); ++k)
            product *= static_cast<std::size_t>(alpha[k] - alpha[k + 1] + 1);
        const auto gt2 = enumerate_gt2(alpha);
        c.expect(gt2.size() == product, "|GT2(" + to_string(alpha) + ")|");
        if (alpha.size() < 2)
            continue;
        for (const auto& mu : gt2)
            c.expect(row_determinant(alpha, mu) ==
                         hlgt::testing::laplace_determinant(hlgt::testing::build_row_matrix(alpha, mu)),
                     "Laplace at (" + to_string(alpha) + ")/(" + to_string(mu) + ")");
    }
    for (const auto& lambda : acceptance_grid()) {
        const std::vector<Integer> ones(lambda.size(), 1);
        c.expect(evaluate(schur_polynomial(lambda), ones, 0, 0) == Integer(enumerate_gt_patterns(lambda, false).size()),
                 "schur at ones for (" + to_string(lambda) + ")");
    }
    const std::vector<std::size_t> sizes{3, 4};
    const auto rows = run_bench(sizes, 2, 1);
    std::ostringstream csv;
    write_bench_csv(csv, rows);
    c.expect(csv.str().rfind("n,lambda,mode,terms,seconds\n", 0) == 0, "bench CSV header");
    c.expect(rows.size() == 2 * (weakly_decreasing_partitions(3, 2).size() + weakly_decreasing_partitions(4, 2).size()),
             "bench row count");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"closed form equals v_n(x;q) HL_lambda on the grid", criterion_1},
        {"recursive form equals v_n(x;q) HL_lambda on the grid", criterion_2},
        {"Tokuyama specialization and its recursive form", criterion_3},
        {"Stanley specializations (q=-1,t=0), strict t=-1 and filtered", criterion_4},
        {"monomial specialization at t=1", criterion_5},
        {"raising shift HL_[i i+1](lambda) = t HL_lambda", criterion_6},
        {"worked example goldens", criterion_7},
        {"closure of (6,4,3,1) and its lengths", criterion_8},
        {"w and d value table", criterion_9},
        {"structural oracles and bench CSV", criterion_10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = check.failures.empty();
        failed += !ok;
        std::printf("[%s] %zu %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    check.checks, secs);
        for (std::size_t k = 0; k < check.failures.size() && k < 10; ++k)
            std::printf("       %s\n", check.failures[k].c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
