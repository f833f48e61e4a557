#pragma once

// Characters of symmetric groups over Q: partitions, the Murnaghan-Nakayama
// rule, Littlewood-Richardson products, and the multiplicity-free
// decomposition of the free FIM+ modules.

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "injword/combinatorics.hpp"
#include "injword/integer.hpp"
#include "injword/report.hpp"

namespace injword {

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    int operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 0; j < (parts.empty() ? 0 : parts[0]); ++j)
            c.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [&](int p) { return p > j; })));
        return Partition(std::move(c));
    }
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
    bool operator==(const Partition&) const = default;
    /// Reverse lexicographic: (n) comes first.
    bool operator<(const Partition& o) const { return parts > o.parts; }
};

/// Partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

inline std::size_t partition_index(const Partition& p) {
    const auto all = partitions(p.size());
    auto it = std::find(all.begin(), all.end(), p);
    return static_cast<std::size_t>(it - all.begin());
}

/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of cycle type mu.
inline Integer centralizer_order(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts) ++mult[p];
    Integer z = 1;
    for (const auto& [part, m] : mult) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
        z *= pw * factorial(static_cast<unsigned>(m));
    }
    return z;
}

/// A class function on S_n, indexed by partitions(n) as cycle types.
struct CharacterVector {
    int n = 0;
    std::vector<Integer> values;

    Integer at(const Partition& mu) const { return values.at(partition_index(mu)); }
    Integer degree() const { return values.empty() ? Integer(0) : values.back(); }  // value on (1^n)
    bool operator==(const CharacterVector&) const = default;
};

namespace detail {

/// chi^lambda(mu) by stripping rim hooks of length mu_1 on beta-numbers.
inline Integer mn_value(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from,
                        std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
    if (from == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, from);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu[from];
    const std::size_t len = lambda.size();
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
    std::set<int> bset(beta.begin(), beta.end());
    Integer total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int target = beta[i] - r;
        if (target < 0 || bset.count(target)) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> next;
        for (std::size_t j = 0; j < len; ++j) {
            const int part = nb[j] - static_cast<int>(len - 1 - j);
            if (part > 0) next.push_back(part);
        }
        Integer v = mn_value(next, mu, from + 1, memo);
        total += (between % 2 == 0) ? v : Integer(-v);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// The irreducible character chi^lambda.
inline CharacterVector mn_character(const Partition& lambda) {
    CharacterVector chi;
    chi.n = lambda.size();
    for (const auto& mu : partitions(chi.n)) {
        std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;  // keyed per cycle type
        chi.values.push_back(detail::mn_value(lambda.parts, mu.parts, 0, memo));
    }
    return chi;
}

/// chi^lambda for all lambda of n, cached.
inline const std::vector<CharacterVector>& character_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<CharacterVector>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<CharacterVector> rows;
        for (const auto& l : partitions(n)) rows.push_back(mn_character(l));
        it = cache.emplace(n, std::move(rows)).first;
    }
    return it->second;
}

inline Rational inner_product(const CharacterVector& a, const CharacterVector& b) {
    if (a.n != b.n) throw std::invalid_argument("inner product of characters of different degrees");
    const auto mus = partitions(a.n);
    Rational s = 0;
    for (std::size_t i = 0; i < mus.size(); ++i) s += Rational(a.values[i] * b.values[i], centralizer_order(mus[i]));
    s.canonicalize();
    return s;
}

/// Multiplicities of irreducibles; zero multiplicities are not stored.
struct SchurExpansion {
    int n = 0;
    std::map<Partition, Integer> multiplicities;

    Integer multiplicity(const Partition& p) const {
        auto it = multiplicities.find(p);
        return it == multiplicities.end() ? Integer(0) : it->second;
    }
    void add(const Partition& p, const Integer& m) {
        if (m == 0) return;
        auto& v = multiplicities[p];
        v += m;
        if (v == 0) multiplicities.erase(p);
    }
    Integer dimension() const {
        Integer d = 0;
        for (const auto& [p, m] : multiplicities) d += m * mn_character(p).degree();
        return d;
    }
    bool multiplicity_free() const {
        return std::all_of(multiplicities.begin(), multiplicities.end(), [](const auto& e) { return e.second == 1; });
    }
    std::vector<Partition> support() const {
        std::vector<Partition> s;
        for (const auto& [p, m] : multiplicities) s.push_back(p);
        return s;
    }
    bool operator==(const SchurExpansion& o) const { return n == o.n && multiplicities == o.multiplicities; }
    std::string to_string() const {
        std::string s;
        for (const auto& [p, m] : multiplicities) s += (s.empty() ? "" : " + ") + (m == 1 ? "" : m.get_str() + "*") + "V" + p.to_string();
        return s.empty() ? "0" : s;
    }
};

inline SchurExpansion irreducible(const Partition& p) {
    SchurExpansion e;
    e.n = p.size();
    e.add(p, 1);
    return e;
}

inline SchurExpansion decompose(const CharacterVector& chi) {
    SchurExpansion e;
    e.n = chi.n;
    const auto parts = partitions(chi.n);
    const auto& table = character_table(chi.n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational m = inner_product(chi, table[i]);
        if (!is_integral(m)) throw std::domain_error("non-integral multiplicity " + to_string(m) + " for " + parts[i].to_string());
        e.add(parts[i], m.get_num());
    }
    return e;
}

inline CharacterVector character_of(const SchurExpansion& e) {
    CharacterVector chi;
    chi.n = e.n;
    chi.values.assign(partitions(e.n).size(), 0);
    for (const auto& [p, m] : e.multiplicities) {
        const auto row = mn_character(p);
        for (std::size_t i = 0; i < row.values.size(); ++i) chi.values[i] += m * row.values[i];
    }
    return chi;
}

/// Littlewood-Richardson coefficient c^nu_{lambda mu}: the number of skew
/// tableaux of shape nu/lambda and content mu whose reverse reading word is
/// a lattice word.
inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i)
        if (lambda[i] > nu[i]) return 0;
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;  // reading order: rows top to bottom, right to left
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu[static_cast<std::size_t>(r)] - 1; c >= lambda[static_cast<std::size_t>(r)]; --c) cells.push_back({r, c});
    std::map<std::pair<int, int>, int> filled;
    std::vector<int> count(static_cast<std::size_t>(mu.length()) + 1, 0);
    Integer total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[i];
        int lo = 1;
        int hi = mu.length();
        if (auto it = filled.find({r, c + 1}); it != filled.end()) hi = std::min(hi, it->second);
        if (auto it = filled.find({r - 1, c}); it != filled.end()) lo = std::max(lo, it->second + 1);
        for (int v = lo; v <= hi; ++v) {
            if (count[static_cast<std::size_t>(v)] >= mu[static_cast<std::size_t>(v - 1)]) continue;
            if (v > 1 && count[static_cast<std::size_t>(v)] + 1 > count[static_cast<std::size_t>(v - 1)]) continue;
            ++count[static_cast<std::size_t>(v)];
            filled[{r, c}] = v;
            rec(i + 1);
            filled.erase({r, c});
            --count[static_cast<std::size_t>(v)];
        }
    };
    rec(0);
    return total;
}

/// Ind from S_a x S_b to S_{a+b} on Schur expansions.
inline SchurExpansion lr_product(const SchurExpansion& x, const SchurExpansion& y) {
    SchurExpansion out;
    out.n = x.n + y.n;
    const auto targets = partitions(out.n);
    for (const auto& [l, ml] : x.multiplicities)
        for (const auto& [m, mm] : y.multiplicities)
            for (const auto& nu : targets) {
                Integer c = lr_coefficient(l, m, nu);
                if (c != 0) out.add(nu, ml * mm * c);
            }
    return out;
}

inline CharacterVector induce_product(const CharacterVector& a, const CharacterVector& b) {
    return character_of(lr_product(decompose(a), decompose(b)));
}

/// Geometric staircase test: cut the diagram along the staircase; the part
/// strictly right of the diagonal, shifted one column left and reflected in
/// the main diagonal, must be the part on or below it.
inline bool staircase_symmetric(const Partition& lambda) {
    std::set<std::pair<int, int>> upper_reflected, lower;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) {
            if (c > r)
                upper_reflected.insert({c - 1, r});
            else
                lower.insert({r, c});
        }
    return upper_reflected == lower;
}

/// Partitions of n in D_n (empty unless n is even).
inline std::vector<Partition> d_set(int n) {
    std::vector<Partition> out;
    if (n < 0 || n % 2 != 0) return out;
    for (const auto& p : partitions(n))
        if (staircase_symmetric(p)) out.push_back(p);
    return out;
}

inline SchurExpansion m0_expansion(int n) {
    SchurExpansion e;
    e.n = n;
    for (const auto& p : d_set(n)) e.add(p, 1);
    return e;
}

/// M^{FIM+}(W)_k = Ind W (x) M^{FIM+}(0)_{k-d}, and zero for the wrong parity.
inline SchurExpansion decompose_free_fimplus(const SchurExpansion& w, int k) {
    const int d = w.n;
    if (k < d || (k - d) % 2 != 0) {
        SchurExpansion zero;
        zero.n = k;
        return zero;
    }
    return lr_product(w, m0_expansion(k - d));
}

/// A permutation of {1..n} with cycle type mu: consecutive cycles (1..mu_1)(...).
inline std::vector<int> permutation_of_type(const Partition& mu) {
    std::vector<int> p(static_cast<std::size_t>(mu.size()) + 1);
    int start = 1;
    for (int part : mu.parts) {
        for (int i = 0; i < part; ++i) p[static_cast<std::size_t>(start + i)] = start + (i + 1) % part;
        start += part;
    }
    return p;
}

/// Character of S_n on oriented perfect matchings of [n]: sigma sends
/// B_1 ^ ... ^ B_b to sigma(B_1) ^ ... ^ sigma(B_b).
inline CharacterVector oriented_matching_character(int n) {
    CharacterVector chi;
    chi.n = n;
    const auto matchings = perfect_matchings(GroundSet::standard(n));
    for (const auto& mu : partitions(n)) {
        const auto sigma = permutation_of_type(mu);
        Integer trace = 0;
        for (const auto& m : matchings) {
            std::vector<Block> image;
            for (auto [a, b] : m.blocks) {
                Label x = sigma[static_cast<std::size_t>(a)], y = sigma[static_cast<std::size_t>(b)];
                image.emplace_back(std::min(x, y), std::max(x, y));
            }
            std::vector<Label> mins;
            for (const auto& blk : image) mins.push_back(blk.first);
            auto sorted = image;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != m.blocks) continue;
            trace += permutation_sign(mins);
        }
        chi.values.push_back(trace);
    }
    return chi;
}

/// Decomposes the oriented-matching module of S_{2k} and compares with D_{2k}.
inline Report verify_m0_decomposition(int n) {
    Report rep("decomposition of M(0)_" + std::to_string(n));
    if (n % 2 != 0) {
        rep.check(false, "odd degree");
        return rep;
    }
    const auto observed = decompose(oriented_matching_character(n));
    const auto predicted = m0_expansion(n);
    rep.check(observed.multiplicity_free(), "not multiplicity free: " + observed.to_string());
    rep.check(observed == predicted, "character gives " + observed.to_string() + ", staircase set gives " + predicted.to_string());
    rep.note("decomposition", observed.to_string());
    rep.note("dimension", observed.dimension().get_str());
    return rep;
}

}  // namespace injword
