#include <gtest/gtest.h>

#include "injword/bounds.hpp"
#include "oracles.hpp"

using namespace injword;

TEST(Degree, Arithmetic) {
    const auto inf = Degree::infinity();
    EXPECT_EQ(Degree(2) + Degree(3), Degree(5));
    EXPECT_EQ(Degree(2) + inf, inf);
    EXPECT_TRUE(Degree(100) < inf);
    EXPECT_FALSE(inf < inf);
    EXPECT_EQ(dmax({Degree(1), inf, Degree(4)}), inf);
    EXPECT_EQ(inf.to_string(), "inf");
    EXPECT_THROW(Degree(-1), std::invalid_argument);
    EXPECT_THROW((void)inf.value(), std::logic_error);
}

TEST(HomFi, Formula) {
    const auto b = homfi_bounds(2, 0, 4, 0, 6, 0);
    EXPECT_EQ(b.gen, Degree(11));
    EXPECT_EQ(b.rel, Degree(16));
    const auto i = homfi_bounds(0, 0, 1, Degree::infinity(), 1, 1);
    EXPECT_EQ(i.gen, Degree::infinity());
    EXPECT_EQ(i.rel, Degree::infinity());
}

TEST(HomFiProperty, Monotone) {
    for (int trial = 0; trial < 200; ++trial) {
        std::array<long, 6> x{}, y{};
        for (std::size_t j = 0; j < 6; ++j) {
            x[j] = oracle::uniform(0, 10);
            y[j] = x[j] + oracle::uniform(0, 3);
        }
        const auto a = homfi_bounds(x[0], x[1], x[2], x[3], x[4], x[5]);
        const auto b = homfi_bounds(y[0], y[1], y[2], y[3], y[4], y[5]);
        EXPECT_TRUE(a.gen <= b.gen);
        EXPECT_TRUE(a.rel <= b.rel);
    }
}

TEST(SpectralPages, E1AndE2) {
    EXPECT_EQ(e1_bounds(2, 1).gen, Degree(6));
    EXPECT_EQ(e1_bounds(2, 1, true).gen, Degree(4));
    EXPECT_EQ(e1_bounds(2, 1).rel, Degree(0));
    // E2 comes from three adjacent E1 cells; it must lie within the affine E2 start.
    for (int s = 0; s <= 12; ++s)
        for (int p = 0; p <= s; ++p) {
            const auto b = e2_bounds(p, s - p);
            EXPECT_TRUE(b.gen <= Degree(4L * s + 3)) << p << "," << s - p;
            EXPECT_TRUE(b.rel <= Degree(6L * s + 4)) << p << "," << s - p;
        }
}

TEST(BoundMatrix, OneStepAndOracle) {
    EXPECT_EQ(iterate_bound_matrix(e2_start(), 1), (BoundVector{10, 18, 14, 22}));
    BoundVector v = e2_start();
    std::array<oracle::Z, 5> w{4, 3, 6, 4, 1};
    for (int r = 0; r < 15; ++r) {
        v = iterate_bound_matrix(v, 1);
        w = oracle::bound_matrix_step(w);
        EXPECT_EQ(v, (BoundVector{w[0], w[1], w[2], w[3]}));
    }
    EXPECT_THROW(iterate_bound_matrix(v, -1), std::invalid_argument);
}

TEST(BoundMatrix, DominatedBySilverVector) {
    for (int r = 2; r <= 20; ++r) {
        EXPECT_TRUE(dominated_by(iterate_bound_matrix(e2_start(), r - 1), silver_bound_vector(r))) << r;
        EXPECT_TRUE(dominated_by(iterate_bound_matrix(e2_start(), r - 2), silver_bound_vector(r))) << r;
    }
    // One step further escapes: the vector is nearly tight.
    EXPECT_FALSE(dominated_by(iterate_bound_matrix(e2_start(), 2), silver_bound_vector(2)));
}

TEST(RootTwo, ExactSign) {
    EXPECT_EQ(RootTwo(3, -2).sign(), 1);   // 3 > 2.828
    EXPECT_EQ(RootTwo(-3, 2).sign(), -1);
    EXPECT_EQ(RootTwo(0, 0).sign(), 0);
    EXPECT_EQ(RootTwo(-1, 1).sign(), 1);
    // Consecutive convergents of sqrt 2 straddle it.
    EXPECT_EQ(RootTwo(577, -408).sign(), 1);
    EXPECT_EQ(RootTwo(-1393, 985).sign(), 1);
    EXPECT_EQ(RootTwo(1393, -985).sign(), -1);
    EXPECT_EQ(RootTwo::silver(3) * RootTwo::silver(-3), RootTwo(1));
    EXPECT_EQ(RootTwo::silver(2), RootTwo(3, 2));
    EXPECT_EQ(RootTwo(63, -42).to_string(), "63 - 42*sqrt(2)");
    EXPECT_EQ(RootTwo(1, 1).to_decimal(6), "2.41421");
}

TEST(RootTwoProperty, SignMatchesHighPrecision) {
    for (int trial = 0; trial < 300; ++trial) {
        const int a = oracle::uniform(-2000, 2000), b = oracle::uniform(-1500, 1500);
        const mpf_class x = mpf_class(a, 256) + mpf_class(b, 256) * sqrt(mpf_class(2, 256));
        EXPECT_EQ(RootTwo(a, b).sign(), sgn(x)) << a << "," << b;
    }
}

TEST(ClosedManifold, ClosedForm) {
    const auto two = closed_manifold_bounds(2);
    EXPECT_EQ(two.gen, RootTwo(63));
    EXPECT_EQ(two.rel, RootTwo(84));
    EXPECT_TRUE(two.page_within_closed_form);
    for (int p = 0; p <= 15; ++p) {
        const auto b = closed_manifold_bounds(p);
        EXPECT_TRUE(b.page_within_closed_form);
        EXPECT_EQ(b.gen, RootTwo(21L * (p + 1)) * RootTwo::silver(p - 2));
    }
    EXPECT_THROW(closed_manifold_bounds(-1), std::invalid_argument);
}

TEST(ClosedManifold, PagesGrowWithR) {
    for (int s = 0; s <= 6; ++s)
        for (int r = 2; r <= 10; ++r) {
            EXPECT_TRUE(page_bounds(s, r).gen <= page_bounds(s, r + 1).gen);
            EXPECT_TRUE(page_bounds(s, r).rel <= page_bounds(s, r + 1).rel);
        }
    EXPECT_EQ(page_bounds(3, 1).gen, Degree(6));
    EXPECT_THROW(page_bounds(1, 0), std::invalid_argument);
}
