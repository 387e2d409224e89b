#include <random>

#include <gtest/gtest.h>

#include "argcount/random.hpp"
#include "argcount/walks.hpp"
#include "test_support.hpp"

using namespace argcount;
using argcount::oracle::four_args;

namespace {

Framework chain3() { return build_af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

} // namespace

TEST(WalkCountMatrix, PowerZeroIsIdentity) {
    const auto af = four_args();
    EXPECT_EQ(walk_count_matrix(af, 0).counts, BigMatrix::identity(4));
}

TEST(WalkCountMatrix, PowerOneIsAttackMatrix) {
    const auto af = four_args();
    const auto a = attack_matrix(af).dense();
    const auto m = walk_count_matrix(af, 1).counts;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            EXPECT_EQ(m(i, j), a[i][j]);
}

TEST(WalkCountMatrix, FourArgsSquareRowX3) {
    const auto af = four_args();
    const auto m = walk_count_matrix(af, 2).counts;
    EXPECT_EQ(m.row(2), (std::vector<BigInt>{0, 1, 2, 1}));
    EXPECT_EQ(m(2, 2), 2);
}

TEST(WalkCountMatrix, FourArgsTwoFourWalksFromX3ToX1) {
    const auto af = four_args();
    EXPECT_EQ(walk_count_matrix(af, 4).counts(af.index_of("x1"), af.index_of("x3")), 2);
}

TEST(WalkCountMatrix, SquaringAgreesWithSequenceAndEnumeration) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const auto af = random_framework(rng, 1 + trial % 5, 0.4);
        const auto seq = walk_count_sequence(af, 6);
        for (std::size_t l = 0; l <= 6; ++l) {
            const auto squared = walk_count_matrix(af, l).counts;
            EXPECT_EQ(squared, seq[l].counts);
            for (ArgIndex i = 0; i < af.size(); ++i)
                for (ArgIndex j = 0; j < af.size(); ++j)
                    EXPECT_EQ(squared(i, j), oracle::enumerate_walks(af, j, i, l));
        }
    }
}

TEST(CountWalks, FourArgsWalks) {
    const auto af = four_args();
    const auto x1 = af.index_of("x1"), x2 = af.index_of("x2"), x3 = af.index_of("x3");
    EXPECT_EQ(count_walks(af, x2, x1, 1), 1);
    EXPECT_EQ(count_walks(af, x2, x1, 3), 1);
    EXPECT_EQ(count_walks(af, x2, x1, 0), 0);
    EXPECT_EQ(count_walks(af, x3, x1, 4), 2);
    EXPECT_THROW(count_walks(af, 7, x1, 1), UnknownArgument);
}

TEST(CountWalks, HundredStepWalksAreFibonacci) {
    const auto af = four_args();
    const auto x2 = af.index_of("x2"), x3 = af.index_of("x3");
    const BigInt expected("354224848179261915075");
    EXPECT_EQ(oracle::fibonacci(100), expected);
    EXPECT_EQ(count_walks(af, x3, x2, 100), expected);
    EXPECT_EQ(walk_count_matrix(af, 100).counts(x2, x3), expected);
    // Fibonacci transfer matrix on {x2, x3}: walks x3 -> x2 of length l are F(l).
    for (unsigned l = 1; l <= 40; ++l)
        EXPECT_EQ(count_walks(af, x3, x2, l), oracle::fibonacci(l));
}

TEST(CountWalks, AgreesWithEnumeration) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto af = random_framework(rng, 1 + trial % 5, 0.45);
        for (ArgIndex x = 0; x < af.size(); ++x)
            for (ArgIndex y = 0; y < af.size(); ++y)
                for (std::size_t l = 0; l <= 5; ++l)
                    EXPECT_EQ(count_walks(af, x, y, l), oracle::enumerate_walks(af, x, y, l));
    }
}

TEST(Classify, FourArgsRoles) {
    const auto af = four_args();
    const auto x1 = af.index_of("x1"), x2 = af.index_of("x2"), x4 = af.index_of("x4");
    EXPECT_EQ(classify(af, x2, x1, 1), WalkRole::attacker);
    EXPECT_EQ(classify(af, x2, x1, 4), WalkRole::defender);
    EXPECT_EQ(classify(af, x4, x1, 1), WalkRole::neither);
    EXPECT_EQ(classify(af, x1, x1, 0), WalkRole::defender);
}

TEST(HasCycle, Cases) {
    EXPECT_TRUE(has_cycle(four_args()));
    EXPECT_FALSE(has_cycle(chain3()));
    EXPECT_TRUE(has_cycle(build_af({"a"}, {{"a", "a"}})));
    EXPECT_FALSE(has_cycle(Framework{}));
    EXPECT_TRUE(has_cycle(cycle_framework(7)));
}

TEST(Nilpotency, Cases) {
    EXPECT_EQ(nilpotency_index(chain3()), 3u);
    EXPECT_EQ(nilpotency_index(four_args()), std::nullopt);
    EXPECT_EQ(nilpotency_index(build_af({"a", "b"}, {})), 1u);
    EXPECT_EQ(nilpotency_index(Framework{}), 0u);
}

TEST(Nilpotency, DichotomyOnRandomFrameworks) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const auto af = random_framework(rng, n, 0.02 + 0.3 * (trial % 5) / 4.0);
        const auto seq = walk_count_sequence(af, 2 * n + 1);
        const auto index = nilpotency_index(af);
        if (has_cycle(af)) {
            EXPECT_FALSE(index.has_value());
            for (std::size_t l = 0; l <= 2 * n; ++l)
                EXPECT_FALSE(seq[l].counts.is_zero()) << "l=" << l;
        } else {
            ASSERT_TRUE(index.has_value());
            ASSERT_LE(*index, n);
            for (std::size_t l = 0; l <= 2 * n + 1; ++l)
                EXPECT_EQ(seq[l].counts.is_zero(), l >= *index) << "l=" << l;
        }
    }
}

TEST(DisputeTree, FourArgsFromX1) {
    const auto af = four_args();
    const auto tree = dispute_tree(af, af.index_of("x1"), 2);
    ASSERT_EQ(tree.levels(), 3u);
    EXPECT_EQ(tree.level_arguments(0), (std::vector<ArgIndex>{0}));
    EXPECT_EQ(tree.level_arguments(1), (std::vector<ArgIndex>{1}));
    auto level2 = tree.level_arguments(2);
    std::sort(level2.begin(), level2.end());
    EXPECT_EQ(level2, (std::vector<ArgIndex>{2, 3}));

    const auto deeper = dispute_tree(af, af.index_of("x1"), 4);
    std::vector<std::size_t> sizes;
    for (std::size_t d = 0; d < deeper.levels(); ++d)
        sizes.push_back(deeper.level_size(d));
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 2, 4}));
}

TEST(DisputeTree, UnattackedRootIsSingleNode) {
    const auto af = four_args();
    const auto tree = dispute_tree(af, af.index_of("x4"), 5);
    EXPECT_EQ(tree.nodes.size(), 1u);
    EXPECT_EQ(tree.nodes[0].status(), NodeStatus::defender);
    EXPECT_THROW(dispute_tree(af, 42, 1), UnknownArgument);
}

TEST(DisputeTree, NodeBudget) {
    const auto af = four_args();
    EXPECT_THROW(dispute_tree(af, af.index_of("x1"), 30, 1000), Error);
}

TEST(DisputeTree, StructureAndParity) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto af = random_framework(rng, 1 + trial % 5, 0.4);
        for (ArgIndex root = 0; root < af.size(); ++root) {
            const auto tree = dispute_tree(af, root, 5);
            EXPECT_EQ(tree.nodes[0].depth, 0u);
            for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
                const auto& node = tree.nodes[k];
                EXPECT_EQ(node.status() == NodeStatus::defender, node.depth % 2 == 0);
                if (node.depth < 5) {
                    std::vector<ArgIndex> labels;
                    for (auto c : node.children) {
                        EXPECT_EQ(tree.nodes[c].depth, node.depth + 1);
                        EXPECT_EQ(tree.nodes[c].parent, k);
                        labels.push_back(tree.nodes[c].argument);
                    }
                    EXPECT_EQ(labels, af.attackers_of(node.argument));
                } else {
                    EXPECT_TRUE(node.children.empty());
                }
            }
        }
    }
}

TEST(DisputeTree, LevelCountsMatchWalkTotals) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const auto af = random_framework(rng, 1 + trial % 6, 0.35);
        const auto totals = walk_totals(af, 8);
        for (ArgIndex root = 0; root < af.size(); ++root) {
            const auto tree = dispute_tree(af, root, 8);
            const auto dfs = oracle::dispute_level_counts(af, root, 8);
            for (std::size_t l = 0; l <= 8; ++l) {
                EXPECT_EQ(BigInt(tree.level_size(l)), totals[l][root]);
                EXPECT_EQ(BigInt(dfs[l]), totals[l][root]);
            }
        }
    }
}
