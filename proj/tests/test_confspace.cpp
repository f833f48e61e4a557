#include <gtest/gtest.h>

#include "injword/confspace.hpp"
#include "oracles.hpp"

using namespace injword;

TEST(ConfigBetti, ProductFormula) {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 8; ++k) {
            const auto poly = oracle::config_poincare(n - 1, k);
            for (int i = 0; i <= (n - 1) * std::max(k - 1, 0) + 2; ++i) {
                const oracle::Z want = i < static_cast<int>(poly.size()) ? poly[static_cast<std::size_t>(i)] : 0;
                EXPECT_EQ(config_betti(n, k, i), want) << n << "," << k << "," << i;
            }
        }
}

TEST(ConfigBetti, TotalRankIsFactorial) {
    for (int k = 0; k <= 9; ++k) {
        Integer total = 0;
        for (int i = 0; i <= 2 * k; ++i) total += config_betti(3, k, i);
        EXPECT_EQ(total, oracle::factorial(k));
    }
}

TEST(CohenCount, FastAndSlowPathsAgree) {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 7; ++k)
            for (int mb = 1; mb <= 3; ++mb)
                for (int q = 0; q <= (n - 1) * k; ++q) EXPECT_EQ(cohen_count(n, k, q, mb), cohen_count_by_partitions(n, k, q, mb));
    EXPECT_THROW(cohen_count(1, 3, 0, 1), std::invalid_argument);
}

TEST(CohenCount, SingletonsReconstructBetti) {
    // Every monomial is a choice of non-singleton letters j plus a W-monomial on them.
    for (int k = 0; k <= 7; ++k)
        for (int q = 0; q < k; ++q) {
            Integer total = 0;
            for (int j = 0; j <= k; ++j) total += oracle::binomial(k, j) * cohen_count(2, j, q, 2);
            EXPECT_EQ(total, config_betti(2, k, q));
        }
}

TEST(CohenMonomials, EnumerationMatchesCounts) {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= 6; ++k) {
            std::map<int, long> by_degree;
            for (const auto& m : cohen_monomials(n, k)) {
                ++by_degree[m.degree()];
                ASSERT_EQ(m.blocks.size(), m.brackets.size());
            }
            for (const auto& [q, c] : by_degree) EXPECT_EQ(config_betti(n, k, q), c);
            EXPECT_EQ(Integer(static_cast<long>(cohen_monomials(n, k).size())), oracle::factorial(k));
        }
}

TEST(WModule, EvenDimensionIsMatchings) {
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(w_module_dim(2, 0, 2 * k), oracle::matchings_count(2 * k)) << k;
    EXPECT_EQ(w_module_dim(2, 0, 3), 0);
    EXPECT_EQ(w_module_dim(2, 1, 3), 2);
}

TEST(SecondaryGenerators, VanishBeyondBound) {
    struct Case {
        int n, d;
    };
    for (const auto [n, d] : {Case{2, 1}, Case{2, 2}, Case{3, 1}, Case{3, 2}, Case{4, 1}})
        for (int i = 1; i <= 4; ++i) {
            const int bound = i * (d * d + d) / (n - 1);
            bool witness = false;
            for (int k = 0; k <= bound; ++k) witness = witness || count_secondary_generators(n, d, i, k) != 0;
            for (int k = bound + 1; k <= bound + 12; ++k) EXPECT_EQ(count_secondary_generators(n, d, i, k), 0) << n << d << i << k;
            // Degrees are multiples of n - 1; off that lattice everything vanishes.
            if (i % (n - 1) != 0) continue;
            EXPECT_TRUE(witness) << n << d << i;
        }
    EXPECT_THROW(count_secondary_generators(2, 0, 1, 1), std::invalid_argument);
}

TEST(SecondaryGenerators, SharpForPairs) {
    // With d = 1 the last nonzero count sits exactly at the bound.
    for (int i = 1; i <= 4; ++i) EXPECT_NE(count_secondary_generators(2, 1, i, 2 * i), 0);
}

TEST(PuncturedDisk, NotSupported) { EXPECT_THROW(config_betti_punctured_disk(2, 3, 1, 1), std::logic_error); }
