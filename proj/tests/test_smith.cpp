#include <gtest/gtest.h>

#include "injword/chain_complex.hpp"
#include "injword/smith.hpp"
#include "oracles.hpp"

using namespace injword;

namespace {
SparseMatrix from(const oracle::DenseZ& d, int cols) { return SparseMatrix::from_dense(d, cols); }
}

TEST(Smith, Diagonal) {
    const auto snf = smith_form(from({{2, 0}, {0, 3}}, 2));
    EXPECT_EQ(snf.rank, 2);
    EXPECT_EQ(snf.nontrivial, std::vector<Integer>{6});
    EXPECT_EQ(snf.unit_count, 1);
}

TEST(Smith, ZeroAndEmpty) {
    EXPECT_EQ(smith_form(SparseMatrix(3, 4)).rank, 0);
    EXPECT_EQ(smith_form(SparseMatrix(0, 0)).rank, 0);
    EXPECT_TRUE(smith_form(SparseMatrix(0, 0)).unimodular());
}

TEST(Smith, Unimodular) {
    EXPECT_TRUE(smith_form(from({{2, 1}, {1, 1}}, 2)).unimodular());
    EXPECT_FALSE(smith_form(from({{2, 0}, {0, 1}}, 2)).unimodular());
}

TEST(Smith, BigIntegerFallback) {
    const Integer big("123456789012345678901234567890");
    SparseMatrix m(2, 2);
    m.add(0, 0, big);
    m.add(1, 1, big * 2);
    m.canonicalize();
    const auto snf = smith_form(m);
    EXPECT_EQ(snf.rank, 2);
    EXPECT_EQ(snf.nontrivial, (std::vector<Integer>{big, big * 2}));
}

TEST(Smith, OverflowDuringElimination) {
    // Entries near 2^62 force products past int64 in the sparse phase.
    const Integer a("4611686018427387903"), b("4611686018427387901");
    SparseMatrix m(2, 2);
    m.add(0, 0, a);
    m.add(0, 1, b);
    m.add(1, 0, b);
    m.add(1, 1, a);
    m.canonicalize();
    const auto expected = oracle::invariant_factors_by_minors({{a, b}, {b, a}});
    const auto snf = smith_form(m);
    EXPECT_EQ(snf.invariant_factors(), expected);
    EXPECT_EQ(smith_form_bigint(m).invariant_factors(), expected);
}

// Property: invariant factors agree with determinantal divisors.
TEST(SmithProperty, MatchesDeterminantalDivisors) {
    for (int trial = 0; trial < 200; ++trial) {
        const int r = oracle::uniform(1, 4), c = oracle::uniform(1, 4);
        const auto d = oracle::random_matrix(r, c, -6, 6, trial % 3 == 0 ? 0.4 : 0.9);
        const auto snf = smith_form(from(d, c));
        EXPECT_EQ(snf.invariant_factors(), oracle::invariant_factors_by_minors(d)) << "trial " << trial;
        EXPECT_EQ(snf.rank, oracle::rank_over_q(d));
    }
}

TEST(SmithProperty, RankOfLargerSparseMatrices) {
    for (int trial = 0; trial < 40; ++trial) {
        const int r = oracle::uniform(5, 25), c = oracle::uniform(5, 25);
        const auto d = oracle::random_matrix(r, c, -2, 2, 0.2);
        const auto snf = smith_form(from(d, c));
        EXPECT_EQ(snf.rank, oracle::rank_over_q(d));
        EXPECT_EQ(snf.invariant_factors(), smith_form_bigint(from(d, c)).invariant_factors());
    }
}

TEST(SmithProperty, InvariantUnderTranspose) {
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = oracle::random_matrix(oracle::uniform(1, 6), oracle::uniform(1, 6), -9, 9, 0.6);
        const auto m = from(d, static_cast<int>(d[0].size()));
        EXPECT_EQ(smith_form(m).invariant_factors(), smith_form(m.transpose()).invariant_factors());
    }
}

TEST(SparseMatrix, CanonicalizeMergesAndDrops) {
    SparseMatrix m(2, 2);
    m.add(1, 0, 3);
    m.add(1, 0, -3);
    m.add(0, 1, 2);
    m.add(0, 1, 5);
    m.canonicalize();
    ASSERT_EQ(m.nonzeros(), 1u);
    EXPECT_EQ(m.entries()[0].value, 7);
    EXPECT_THROW(m.add(2, 0, 1), std::out_of_range);
}

TEST(SparseMatrix, MultiplyMatchesDense) {
    for (int trial = 0; trial < 30; ++trial) {
        const int n = oracle::uniform(1, 5), k = oracle::uniform(1, 5), m = oracle::uniform(1, 5);
        const auto a = oracle::random_matrix(n, k, -4, 4, 0.5), b = oracle::random_matrix(k, m, -4, 4, 0.5);
        oracle::DenseZ c(static_cast<std::size_t>(n), std::vector<oracle::Z>(static_cast<std::size_t>(m), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                for (int t = 0; t < k; ++t) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * b[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
        EXPECT_EQ(multiply(from(a, k), from(b, m)), from(c, m));
    }
}

TEST(ChainComplex, RejectsBadShapes) {
    EXPECT_THROW(IntChainComplex(0, {1, 2}, {SparseMatrix(2, 1)}), std::invalid_argument);
    SparseMatrix d1(1, 1), d2(1, 1);
    d1.add(0, 0, 1);
    d1.canonicalize();
    d2.add(0, 0, 1);
    d2.canonicalize();
    EXPECT_THROW(IntChainComplex(0, {1, 1, 1}, {d1, d2}), std::invalid_argument);
}

TEST(ChainComplex, HomologyOfMultiplicationByTwo) {
    SparseMatrix d(1, 1);
    d.add(0, 0, 2);
    d.canonicalize();
    const auto h = homology(IntChainComplex(0, {1, 1}, {d}));
    EXPECT_EQ(h.at(0).betti, 0);
    EXPECT_EQ(h.at(0).torsion, std::vector<Integer>{2});
    EXPECT_TRUE(h.at(1).is_zero());
    EXPECT_FALSE(h.torsion_free());
}

TEST(ChainComplex, RealProjectivePlaneCellular) {
    // Cells in degrees 0,1,2 with boundaries 0 and 2.
    SparseMatrix d1(1, 1), d2(1, 1);
    d2.add(0, 0, 2);
    d2.canonicalize();
    const auto h = homology(IntChainComplex(0, {1, 1, 1}, {d1, d2}));
    EXPECT_EQ(h.at(0).betti, 1);
    EXPECT_EQ(h.at(1).torsion, std::vector<Integer>{2});
    EXPECT_TRUE(h.at(2).is_zero());
}
