#include <gtest/gtest.h>

#include "injword/fimplus.hpp"
#include "oracles.hpp"

using namespace injword;

namespace {
/// A random morphism [k] -> [m] with blocks in a random order and a random sign.
FIMPlusMorphism random_morphism(int k, int m) {
    std::vector<Label> pts(static_cast<std::size_t>(m));
    std::iota(pts.begin(), pts.end(), 1);
    std::shuffle(pts.begin(), pts.end(), oracle::rng());
    std::vector<Label> images(pts.begin(), pts.begin() + k);
    std::vector<Block> blocks;
    for (int i = k; i + 1 < m; i += 2) blocks.emplace_back(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(i) + 1]);
    return FIMPlusMorphism(m, images, blocks, oracle::uniform(0, 1) ? 1 : -1);
}

/// Counts pairs (injection, set of blocks covering the rest) by direct search.
long brute_hom_count(int k, int m) {
    long count = 0;
    std::vector<int> used(static_cast<std::size_t>(m) + 1, 0);
    std::function<long()> matchings = [&]() -> long {
        int first = 1;
        while (first <= m && used[static_cast<std::size_t>(first)]) ++first;
        if (first > m) return 1;
        used[static_cast<std::size_t>(first)] = 1;
        long c = 0;
        for (int b = first + 1; b <= m; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            c += matchings();
            used[static_cast<std::size_t>(b)] = 0;
        }
        used[static_cast<std::size_t>(first)] = 0;
        return c;
    };
    std::function<void(int)> images = [&](int placed) {
        if (placed == k) {
            count += matchings();
            return;
        }
        for (int x = 1; x <= m; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            used[static_cast<std::size_t>(x)] = 1;
            images(placed + 1);
            used[static_cast<std::size_t>(x)] = 0;
        }
    };
    images(0);
    return count;
}
}  // namespace

TEST(FimPlusMorphism, Validation) {
    EXPECT_THROW(FIMPlusMorphism(3, {1, 1}, {}), std::invalid_argument);
    EXPECT_THROW(FIMPlusMorphism(3, {1}, {{1, 2}}), std::invalid_argument);
    EXPECT_THROW(FIMPlusMorphism(4, {1}, {{2, 3}}), std::invalid_argument);
    EXPECT_THROW(FIMPlusMorphism(3, {1}, {{2, 3}}, 2), std::invalid_argument);
}

TEST(FimPlusMorphism, BlockOrderGivesSign) {
    const FIMPlusMorphism a(5, {1}, {{2, 3}, {4, 5}});
    const FIMPlusMorphism b(5, {1}, {{5, 4}, {3, 2}});
    EXPECT_TRUE(a.same_basis_element(b));
    EXPECT_EQ(a.sign(), 1);
    EXPECT_EQ(b.sign(), -1);
    EXPECT_EQ(b.to_string(), "-(1 | {2,3} {4,5})");
}

TEST(FimPlusMorphism, Composition) {
    const FIMPlusMorphism f(3, {1}, {{2, 3}});
    const FIMPlusMorphism g(5, {4, 1, 2}, {{3, 5}});
    // g o f sends 1 to 4; blocks are {3,5} then g{2,3} = {1,2}, which sorts with one swap.
    const auto h = fimplus_compose(g, f);
    EXPECT_EQ(h.images(), (std::vector<Label>{4}));
    EXPECT_EQ(h.blocks(), (std::vector<Block>{{1, 2}, {3, 5}}));
    EXPECT_EQ(h.sign(), -1);
    EXPECT_THROW(fimplus_compose(f, g), std::invalid_argument);
    EXPECT_EQ(fimplus_compose(FIMPlusMorphism::identity(5), g), g);
    EXPECT_EQ(fimplus_compose(g, FIMPlusMorphism::identity(3)), g);
}

TEST(FimPlusProperty, Associativity) {
    for (int trial = 0; trial < 500; ++trial) {
        const int a = oracle::uniform(0, 4);
        const int b = a + 2 * oracle::uniform(0, 1);
        const int c = b + 2 * oracle::uniform(0, 1);
        const int d = c + 2 * oracle::uniform(0, (8 - c) / 2);
        const auto f = random_morphism(a, b), g = random_morphism(b, c), h = random_morphism(c, d);
        EXPECT_EQ(fimplus_compose(h, fimplus_compose(g, f)), fimplus_compose(fimplus_compose(h, g), f))
            << f.to_string() << " " << g.to_string() << " " << h.to_string();
    }
}

TEST(FimPlusHom, DimensionsAgreeWithEnumeration) {
    for (int d = 0; d <= 3; ++d)
        for (int k = 0; k <= 8; ++k) {
            const long brute = brute_hom_count(d, k);
            EXPECT_EQ(hom_dim_fimplus(d, k), brute) << d << "," << k;
            EXPECT_EQ(static_cast<long>(fimplus_hom_basis(d, k).size()), brute);
            EXPECT_EQ(static_cast<long>(fimplus_free_basis(d, GroundSet::standard(k)).size()), brute);
        }
}
