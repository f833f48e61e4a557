#pragma once

// Ranks in the Cohen description of H_*(F_k(R^n)): products of iterated
// Browder brackets, one block of letters per bracket, each letter used once.
// A block B carries (|B|-1)! basis brackets in degree (n-1)(|B|-1).

#include <functional>
#include <stdexcept>
#include <vector>

#include "injword/combinatorics.hpp"
#include "injword/integer.hpp"
#include "injword/liealg.hpp"

namespace injword {

/// Weighted count of set partitions of [k] with m blocks, all of size >=
/// min_block, weight prod (|B|-1)!. Recursion on the block containing the
/// largest letter.
inline Integer bracket_products(int k, int m, int min_block) {
    if (k < 0 || m < 0) return 0;
    std::vector<std::vector<Integer>> t(static_cast<std::size_t>(k) + 1, std::vector<Integer>(static_cast<std::size_t>(m) + 1, 0));
    t[0][0] = 1;
    for (int j = 1; j <= k; ++j)
        for (int c = 1; c <= m; ++c)
            for (int b = min_block; b <= j; ++b)
                t[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] +=
                    binomial(j - 1, b - 1) * factorial(static_cast<unsigned>(b - 1)) *
                    t[static_cast<std::size_t>(j - b)][static_cast<std::size_t>(c - 1)];
    return t[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
}

/// Number of Cohen monomials on [k] in homological degree q whose blocks all
/// have at least min_block letters.
inline Integer cohen_count(int n, int k, int q, int min_block) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be at least 2");
    if (k < 0 || q < 0 || q % (n - 1) != 0) return 0;
    const int m = k - q / (n - 1);
    if (m < 0) return 0;
    return bracket_products(k, m, std::max(min_block, 1));
}

/// dim H_i(F_k(R^n)).
inline Integer config_betti(int n, int k, int i) { return cohen_count(n, k, i, 1); }

/// dim W_i at k: FI-generators of H_q(F(R^n)) with q = ((n-1)k + i)/2, that
/// is, monomials without singleton blocks. Zero when q is not integral.
inline Integer w_module_dim(int n, int i, int k) {
    const long twice = static_cast<long>(n - 1) * k + i;
    if (twice < 0 || twice % 2 != 0) return 0;
    return cohen_count(n, k, static_cast<int>(twice / 2), 2);
}

/// Monomials of the W[d] grading, q = ((n-1)(d-1)k + i)/d, built from
/// nested brackets of at least d+1 letters each.
inline Integer count_secondary_generators(int n, int d, int i, int k) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    const long num = static_cast<long>(n - 1) * (d - 1) * k + i;
    if (num < 0 || num % d != 0) return 0;
    return cohen_count(n, k, static_cast<int>(num / d), d + 1);
}

/// Configuration spaces of punctured disks share this interface, but need a
/// reference formula that is not available yet.
inline Integer config_betti_punctured_disk(int /*n*/, int /*k*/, int /*i*/, int /*punctures*/) {
    throw std::logic_error("punctured disks are not supported");
}

// Slow paths, used to cross-check the counts.

/// Sum over explicitly enumerated set partitions.
inline Integer cohen_count_by_partitions(int n, int k, int q, int min_block) {
    Integer total = 0;
    for_each_set_partition(GroundSet::standard(k), [&](const SetPartition& blocks) {
        int degree = 0;
        Integer weight = 1;
        for (const auto& b : blocks) {
            if (static_cast<int>(b.size()) < min_block) return;
            degree += (n - 1) * (static_cast<int>(b.size()) - 1);
            weight *= factorial(static_cast<unsigned>(b.size() - 1));
        }
        if (degree == q) total += weight;
    });
    return total;
}

struct CohenMonomial {
    SetPartition blocks;
    std::vector<BracketTree> brackets;
    int ambient_n = 2;

    int degree() const {
        int d = 0;
        for (const auto& b : blocks) d += (ambient_n - 1) * (static_cast<int>(b.size()) - 1);
        return d;
    }
};

/// Every Cohen monomial on [k], with a Reutenauer bracket on each block.
inline std::vector<CohenMonomial> cohen_monomials(int n, int k) {
    std::vector<CohenMonomial> out;
    for_each_set_partition(GroundSet::standard(k), [&](const SetPartition& blocks) {
        std::vector<std::vector<BracketTree>> choices;
        for (const auto& b : blocks) {
            std::vector<BracketTree> trees;
            if (b.size() == 1)
                trees.push_back(BracketTree::of(b.front()));
            else
                for (auto& e : reutenauer_basis(GroundSet(b))) trees.push_back(std::move(e.tree));
            choices.push_back(std::move(trees));
        }
        std::vector<std::size_t> pick(choices.size(), 0);
        for (;;) {
            CohenMonomial mono{blocks, {}, n};
            for (std::size_t i = 0; i < choices.size(); ++i) mono.brackets.push_back(choices[i][pick[i]]);
            out.push_back(std::move(mono));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    });
    return out;
}

}  // namespace injword
