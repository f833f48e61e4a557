#pragma once

// Slow, independent reference computations. None of these call into the
// library's algorithms; they share only the number types.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using DenseZ = std::vector<std::vector<Z>>;

inline Z factorial(int n) {
    Z r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Z binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Z r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Fixed-point-free permutations, counted by walking all permutations.
inline long derangements_by_enumeration(int k) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        bool fixed = false;
        for (int i = 0; i < k; ++i) fixed = fixed || p[static_cast<std::size_t>(i)] == i;
        count += fixed ? 0 : 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

/// Cycle counts of all permutations of [k].
inline std::vector<long> cycle_type_counts(int k) {
    std::vector<long> counts(static_cast<std::size_t>(k) + 1, 0);
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        int cycles = 0;
        for (int i = 0; i < k; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            ++cycles;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
        }
        ++counts[static_cast<std::size_t>(cycles)];
    } while (std::next_permutation(p.begin(), p.end()));
    return counts;
}

/// Perfect matchings of a 2b-set: (2b-1)!!.
inline Z matchings_count(int n) {
    if (n % 2 != 0) return 0;
    Z r = 1;
    for (int i = n - 1; i > 1; i -= 2) r *= i;
    return r;
}

/// Bell numbers by B_{n+1} = sum_k C(n,k) B_k.
inline std::vector<Z> bell_numbers(int n) {
    std::vector<Z> b{1};
    for (int m = 0; m < n; ++m) {
        Z next = 0;
        for (int k = 0; k <= m; ++k) next += binomial(m, k) * b[static_cast<std::size_t>(k)];
        b.push_back(next);
    }
    return b;
}

/// Rank over Q by plain Gaussian elimination with rationals.
inline long rank_over_q(const DenseZ& m) {
    if (m.empty()) return 0;
    std::vector<std::vector<Q>> a;
    for (const auto& row : m) a.emplace_back(row.begin(), row.end());
    const std::size_t rows = a.size(), cols = a[0].size();
    long rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Q f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline Z determinant(DenseZ m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Q>> a;
    for (const auto& row : m) a.emplace_back(row.begin(), row.end());
    Q det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            const Q f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det.get_num();
}

/// Invariant factors d_1 | d_2 | ... from determinantal divisors: the gcd of
/// all i x i minors is d_1 ... d_i. Exponential; for small matrices only.
inline std::vector<Z> invariant_factors_by_minors(const DenseZ& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    std::vector<Z> divisors{1};
    for (int size = 1; size <= std::min(rows, cols); ++size) {
        Z g = 0;
        std::vector<int> ri(static_cast<std::size_t>(size)), ci(static_cast<std::size_t>(size));
        std::function<void(int, int, std::vector<int>&, int, const std::function<void()>&)> choose =
            [&](int start, int depth, std::vector<int>& idx, int limit, const std::function<void()>& done) {
                if (depth == size) {
                    done();
                    return;
                }
                for (int i = start; i < limit; ++i) {
                    idx[static_cast<std::size_t>(depth)] = i;
                    choose(i + 1, depth + 1, idx, limit, done);
                }
            };
        choose(0, 0, ri, rows, [&] {
            choose(0, 0, ci, cols, [&] {
                DenseZ sub(static_cast<std::size_t>(size), std::vector<Z>(static_cast<std::size_t>(size)));
                for (int a = 0; a < size; ++a)
                    for (int b = 0; b < size; ++b)
                        sub[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                            m[static_cast<std::size_t>(ri[static_cast<std::size_t>(a)])][static_cast<std::size_t>(ci[static_cast<std::size_t>(b)])];
                Z det = determinant(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            });
        });
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<Z> factors;
    for (std::size_t i = 1; i < divisors.size(); ++i) factors.push_back(divisors[i] / divisors[i - 1]);
    return factors;
}

/// Coefficients of prod_{j=1}^{k-1} (1 + j t^{step}).
inline std::vector<Z> config_poincare(int step, int k) {
    std::vector<Z> p{1};
    for (int j = 1; j < k; ++j) {
        std::vector<Z> next(p.size() + static_cast<std::size_t>(step), 0);
        for (std::size_t t = 0; t < p.size(); ++t) {
            next[t] += p[t];
            next[t + static_cast<std::size_t>(step)] += j * p[t];
        }
        p = std::move(next);
    }
    return p;
}

/// Number of partitions of n into distinct parts.
inline long strict_partitions(int n) {
    std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = n; s >= part; --s) c[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(s - part)];
    return c[static_cast<std::size_t>(n)];
}

/// Number of standard Young tableaux by the hook length formula.
inline Z hook_dimension(const std::vector<int>& lambda) {
    int n = 0;
    for (int x : lambda) n += x;
    Z hooks = 1;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c) {
            int below = 0;
            for (std::size_t rr = r + 1; rr < lambda.size() && lambda[rr] > c; ++rr) ++below;
            hooks *= (lambda[r] - c - 1) + below + 1;
        }
    return factorial(n) / hooks;
}

/// The 5x5 recurrence matrix of the closed-manifold bound, on (a,b,c,d,1).
inline std::array<Z, 5> bound_matrix_step(const std::array<Z, 5>& v) {
    static const int m[5][5] = {{1, 0, 1, 0, 0}, {1, 1, 1, 1, 1}, {2, 0, 1, 0, 0}, {1, 2, 1, 1, 2}, {0, 0, 0, 0, 1}};
    std::array<Z, 5> out;
    for (int i = 0; i < 5; ++i) {
        out[static_cast<std::size_t>(i)] = 0;
        for (int j = 0; j < 5; ++j) out[static_cast<std::size_t>(i)] += m[i][j] * v[static_cast<std::size_t>(j)];
    }
    return out;
}

/// Fixed-seed source for the property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234abcdULL);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline DenseZ random_matrix(int rows, int cols, int lo, int hi, double density = 1.0) {
    DenseZ m(static_cast<std::size_t>(rows), std::vector<Z>(static_cast<std::size_t>(cols), 0));
    std::bernoulli_distribution keep(density);
    for (auto& row : m)
        for (auto& x : row)
            if (keep(rng())) x = uniform(lo, hi);
    return m;
}

}  // namespace oracle
