#pragma once

// Enumeration of injections, matchings and set partitions, together with the
// integer sequences (derangements, Lie ranks, Stirling cycle numbers) and the
// exact exponential-generating-function arithmetic built on them.

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "injword/integer.hpp"

namespace injword {

using Label = int;
using Word = std::vector<Label>;

/// An ordered set of distinct labels. The stored order is the canonical order.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<Label> elements) : elements_(std::move(elements)) {
        std::set<Label> seen(elements_.begin(), elements_.end());
        if (seen.size() != elements_.size()) throw std::invalid_argument("GroundSet labels must be distinct");
    }
    /// The standard set [k] = {1, ..., k}.
    static GroundSet standard(int k) {
        std::vector<Label> e(static_cast<std::size_t>(std::max(k, 0)));
        for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i + 1;
        return GroundSet(std::move(e));
    }
    const std::vector<Label>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool contains(Label a) const { return std::find(elements_.begin(), elements_.end(), a) != elements_.end(); }
    /// Position of a label in the canonical order, -1 if absent.
    int position(Label a) const {
        auto it = std::find(elements_.begin(), elements_.end(), a);
        return it == elements_.end() ? -1 : static_cast<int>(it - elements_.begin());
    }
    GroundSet without(const std::vector<Label>& removed) const {
        std::vector<Label> rest;
        for (Label a : elements_)
            if (std::find(removed.begin(), removed.end(), a) == removed.end()) rest.push_back(a);
        return GroundSet(std::move(rest));
    }
    bool operator==(const GroundSet&) const = default;

private:
    std::vector<Label> elements_;
};

using Block = std::pair<Label, Label>;  // always first < second

/// A set of disjoint two-element blocks, kept in canonical form: each block
/// with its smaller element first, blocks sorted by first element.
struct Matching {
    std::vector<Block> blocks;

    static Matching canonical(std::vector<Block> raw) {
        for (auto& b : raw) {
            if (b.first == b.second) throw std::invalid_argument("matching block needs two distinct elements");
            if (b.first > b.second) std::swap(b.first, b.second);
        }
        std::sort(raw.begin(), raw.end());
        std::set<Label> seen;
        for (const auto& b : raw) {
            if (!seen.insert(b.first).second || !seen.insert(b.second).second)
                throw std::invalid_argument("matching blocks must be disjoint");
        }
        return Matching{std::move(raw)};
    }
    auto operator<=>(const Matching&) const = default;
};

/// All injections {0,...,p} -> S as words, lexicographic in the order of S.
inline std::vector<Word> enumerate_injections(int p, const GroundSet& s) {
    std::vector<Word> out;
    const int len = p + 1;
    if (len < 0 || len > s.size()) return out;
    Word cur;
    std::vector<bool> used(static_cast<std::size_t>(s.size()), false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < s.size(); ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            used[static_cast<std::size_t>(i)] = true;
            cur.push_back(s.elements()[static_cast<std::size_t>(i)]);
            rec();
            cur.pop_back();
            used[static_cast<std::size_t>(i)] = false;
        }
    };
    rec();
    return out;
}

/// Perfect matchings of S in canonical form, sorted lexicographically.
inline std::vector<Matching> perfect_matchings(const GroundSet& s) {
    std::vector<Matching> out;
    if (s.size() % 2 != 0) return out;
    std::vector<Label> rest = s.elements();
    std::sort(rest.begin(), rest.end());
    std::vector<Block> cur;
    std::function<void(std::vector<Label>)> rec = [&](std::vector<Label> r) {
        if (r.empty()) {
            out.push_back(Matching{cur});
            return;
        }
        Label a = r.front();
        for (std::size_t j = 1; j < r.size(); ++j) {
            std::vector<Label> next;
            for (std::size_t t = 1; t < r.size(); ++t)
                if (t != j) next.push_back(r[t]);
            cur.emplace_back(a, r[j]);
            rec(std::move(next));
            cur.pop_back();
        }
    };
    rec(rest);
    return out;
}

using SetPartition = std::vector<std::vector<Label>>;

/// Calls visit(blocks) for every set partition of the sorted labels of S.
/// Blocks are sorted internally and listed by their minimum element.
inline void for_each_set_partition(const GroundSet& s, const std::function<void(const SetPartition&)>& visit) {
    std::vector<Label> elems = s.elements();
    std::sort(elems.begin(), elems.end());
    SetPartition blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == elems.size()) {
            visit(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(elems[i]);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({elems[i]});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

inline std::vector<SetPartition> set_partitions(const GroundSet& s) {
    std::vector<SetPartition> out;
    for_each_set_partition(s, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

/// Number of fixed-point-free permutations of [k]: h_0 = 1, h_k = k h_{k-1} + (-1)^k.
inline Integer derangements(int k) {
    if (k < 0) throw std::invalid_argument("derangements: k must be nonnegative");
    Integer h = 1;
    for (int i = 1; i <= k; ++i) h = i * h + ((i % 2 == 0) ? 1 : -1);
    return h;
}

/// Rank of the multilinear part of the free Lie superalgebra on k letters.
inline Integer lie_rank(int k) {
    if (k < 0) throw std::invalid_argument("lie_rank: k must be nonnegative");
    if (k < 2) return 0;
    return factorial(static_cast<unsigned>(k - 1));
}

/// Unsigned Stirling number of the first kind: permutations of [k] with c cycles.
inline Integer stirling_cycle(int k, int c) {
    if (k < 0 || c < 0 || c > k) return 0;
    std::vector<Integer> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int n = 1; n <= k; ++n) {
        std::vector<Integer> next(row.size(), 0);
        for (int j = 1; j <= n; ++j)
            next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + (n - 1) * row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(c)];
}

/// Truncated power series sum c_k x^k with exact rational coefficients.
/// egf_values() returns a_k = k! c_k, the sequence whose EGF this is.
class EgfSeries {
public:
    EgfSeries() = default;
    explicit EgfSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
        for (auto& c : coeffs_) c.canonicalize();
    }
    static EgfSeries from_egf_values(const std::vector<Integer>& a) {
        std::vector<Rational> c;
        c.reserve(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) c.emplace_back(a[k], factorial(static_cast<unsigned>(k)));
        return EgfSeries(std::move(c));
    }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    std::vector<Rational> egf_values() const {
        std::vector<Rational> a;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            Rational v = coeffs_[k] * Rational(factorial(static_cast<unsigned>(k)));
            v.canonicalize();
            a.push_back(v);
        }
        return a;
    }
    bool operator==(const EgfSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// exp(f) truncated to the order of f, via n g_n = sum_{j=1}^n j f_j g_{n-j}.
inline EgfSeries egf_exp(const EgfSeries& f) {
    const auto& fc = f.coefficients();
    if (fc.empty()) return f;
    if (fc[0] != 0) throw std::invalid_argument("egf_exp: constant term must be zero");
    std::vector<Rational> g(fc.size(), Rational(0));
    g[0] = 1;
    for (std::size_t n = 1; n < fc.size(); ++n) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= n; ++j) acc += Rational(static_cast<long>(j)) * fc[j] * g[n - j];
        acc /= Rational(static_cast<long>(n));
        acc.canonicalize();
        g[n] = acc;
    }
    return EgfSeries(std::move(g));
}

/// The EGF of the Lie ranks, -log(1-x) - x, through x^order.
inline EgfSeries lie_series(int order) {
    std::vector<Integer> a;
    for (int k = 0; k <= order; ++k) a.push_back(lie_rank(k));
    return EgfSeries::from_egf_values(a);
}

/// The EGF of the derangement numbers, e^{-x}/(1-x), through x^order.
inline EgfSeries derangement_series(int order) {
    std::vector<Integer> a;
    for (int k = 0; k <= order; ++k) a.push_back(derangements(k));
    return EgfSeries::from_egf_values(a);
}

}  // namespace injword
