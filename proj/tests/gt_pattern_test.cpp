#include <gtest/gtest.h>

#include <set>

#include "hlgt/gt_pattern.hpp"
#include "support/laplace.hpp"

using namespace hlgt;

TEST(Gt2, ThreeOneZero) {
    const auto rows = enumerate_gt2({3, 1, 0});
    const std::set<Partition> got(rows.begin(), rows.end());
    const std::set<Partition> expected{{3, 1}, {3, 0}, {2, 1}, {2, 0}, {1, 1}, {1, 0}};
    EXPECT_EQ(got, expected);
    EXPECT_EQ(rows.size(), 6u);
}

TEST(Gt2, LengthOneGivesEmptyRow) {
    const auto rows = enumerate_gt2({4});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_TRUE(rows[0].empty());
}

TEST(Gt2, RequiresStrictAlpha) { EXPECT_THROW(enumerate_gt2({2, 2}), std::invalid_argument); }

TEST(Gt2, ProductFormula) {
    for (const auto& alpha : hlgt::testing::strict_partitions(5, 6)) {
        std::size_t expected = 1;
        for (std::size_t k = 0; k + 1 < alpha.size(); ++k)
            expected *= static_cast<std::size_t>(alpha[k] - alpha[k + 1] + 1);
        const auto rows = enumerate_gt2(alpha);
        EXPECT_EQ(rows.size(), expected) << to_string(alpha);
        for (const auto& mu : rows)
            EXPECT_TRUE(interleaves(alpha, mu));
        EXPECT_EQ(std::set<Partition>(rows.begin(), rows.end()).size(), rows.size());
    }
}

TEST(Interleaves, Boundaries) {
    const std::vector<int> upper{3, 1, 0}, ok{3, 0}, too_high{4, 0}, too_low{3, -1}, wrong_len{3};
    EXPECT_TRUE(interleaves(upper, ok));
    EXPECT_FALSE(interleaves(upper, too_high));
    EXPECT_FALSE(interleaves(upper, too_low));
    EXPECT_FALSE(interleaves(upper, wrong_len));
}

TEST(Patterns, Counts) {
    EXPECT_EQ(enumerate_gt_patterns({2, 1, 0}, false).size(), 8u);
    EXPECT_EQ(enumerate_gt_patterns({2, 1, 0}, true).size(), 7u);
    EXPECT_EQ(enumerate_gt_patterns({1, 0}, true).size(), 2u);
    EXPECT_EQ(enumerate_gt_patterns({1, 1}, false).size(), 1u);
    EXPECT_EQ(enumerate_gt_patterns({5}, true).size(), 1u);
}

TEST(Patterns, StrictTopRequiredForStrictEnumeration) {
    EXPECT_THROW(enumerate_gt_patterns({1, 1}, true), std::invalid_argument);
    EXPECT_THROW(enumerate_gt_patterns({0, 1}, false), std::invalid_argument);
}

TEST(Patterns, WorkedExampleHasUniquePatternOfWeight211) {
    int found = 0;
    for (const auto& t : enumerate_gt_patterns({3, 1, 0}, true)) {
        if (pattern_weight(t) != std::vector<int>{2, 1, 1})
            continue;
        ++found;
        EXPECT_EQ(t.row(1), Partition({2, 0}));
        EXPECT_EQ(t.row(2), Partition({1}));
    }
    EXPECT_EQ(found, 1);
}

TEST(Patterns, WeightSumsToTopRow) {
    for (const auto& top : hlgt::testing::strict_partitions(4, 4)) {
        for (const auto& t : enumerate_gt_patterns(top, false)) {
            int sum = 0;
            for (int m : pattern_weight(t))
                sum += m;
            EXPECT_EQ(sum, top.weight());
            EXPECT_EQ(t.top(), top);
        }
    }
}

TEST(Patterns, StrictEnumerationIsStrictSubset) {
    const auto all = enumerate_gt_patterns({4, 2, 1, 0}, false);
    const auto strict = enumerate_gt_patterns({4, 2, 1, 0}, true);
    std::size_t strict_in_all = 0;
    for (const auto& t : all)
        strict_in_all += t.is_strict();
    EXPECT_EQ(strict_in_all, strict.size());
    for (const auto& t : strict)
        EXPECT_TRUE(t.is_strict());
}

TEST(Patterns, ValidatingConstructor) {
    EXPECT_NO_THROW(GtPattern({{3, 1, 0}, {2, 0}, {1}}));
    EXPECT_THROW(GtPattern({}), std::invalid_argument);
    EXPECT_THROW(GtPattern({{3, 1, 0}, {2, 0}}), std::invalid_argument);
    EXPECT_THROW(GtPattern({{3, 1, 0}, {4, 0}, {1}}), std::invalid_argument);
    EXPECT_THROW(GtPattern({{3, 1, 0}, {2}, {1}}), std::invalid_argument);
    EXPECT_THROW(GtPattern({{1, 3}, {2}}), std::invalid_argument);
}

TEST(Leaning, Examples) {
    EXPECT_EQ(leaning_counts(GtPattern({{3, 1, 0}, {2, 0}, {1}})), (LeaningCounts{0, 1, 2}));
    EXPECT_EQ(leaning_counts(GtPattern({{3, 1, 0}, {3, 1}, {3}})), (LeaningCounts{3, 0, 0}));
    EXPECT_EQ(leaning_counts(GtPattern({{3, 1, 0}, {1, 0}, {0}})), (LeaningCounts{0, 3, 0}));
    // An entry squeezed between equal parents leans both ways.
    EXPECT_EQ(leaning_counts(GtPattern({{1, 1}, {1}})), (LeaningCounts{1, 1, 0}));
}

TEST(Leaning, EveryEntryIsCountedOnStrictPatterns) {
    for (const auto& t : enumerate_gt_patterns({5, 3, 2, 0}, true)) {
        const auto c = leaning_counts(t);
        EXPECT_EQ(c.left + c.right + c.special, 6);
    }
}
