#pragma once

// FI-modules and free FIM+ modules as concrete data: generator sequences,
// free-module dimensions, presented FI-modules with their H_0, the E^2-page
// dimension table, and the coequalizer condition.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "injword/chain_complex.hpp"
#include "injword/chains.hpp"
#include "injword/combinatorics.hpp"
#include "injword/fimplus.hpp"
#include "injword/integer.hpp"
#include "injword/repth.hpp"
#include "injword/smith.hpp"
#include "injword/symrep.hpp"

namespace injword {

/// Data of a symmetric-group representation in one degree, at one of three
/// levels of detail.
struct FBEntry {
    std::optional<Integer> dim;
    std::optional<CharacterVector> character;
    std::optional<SymmetricGroupRep> matrices;

    Integer dimension() const {
        if (dim) return *dim;
        if (character) return character->degree();
        if (matrices) return matrices->dim();
        return 0;
    }
};

/// A finitely supported sequence of representations, one per degree.
class FBData {
public:
    FBData() = default;
    /// Dimension-only data, e.g. {{2, 5}, {3, 2}}.
    static FBData dims(const std::map<int, Integer>& d) {
        FBData data;
        for (const auto& [k, v] : d) data.set_dim(k, v);
        return data;
    }

    void set_dim(int k, const Integer& v) {
        if (v < 0) throw std::invalid_argument("negative dimension");
        entries_[k] = FBEntry{v, std::nullopt, std::nullopt};
    }
    void set_character(int k, CharacterVector chi) {
        if (chi.n != k || chi.values.size() != partitions(k).size())
            throw std::invalid_argument("character vector has the wrong length for degree " + std::to_string(k));
        entries_[k] = FBEntry{std::nullopt, std::move(chi), std::nullopt};
    }
    void set_matrices(int k, SymmetricGroupRep rep) {
        if (rep.degree() != k) throw std::invalid_argument("representation degree differs from its slot");
        entries_[k] = FBEntry{std::nullopt, std::nullopt, std::move(rep)};
    }

    Integer dim(int k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? Integer(0) : it->second.dimension();
    }
    const std::map<int, FBEntry>& entries() const { return entries_; }
    int max_degree() const { return entries_.empty() ? -1 : entries_.rbegin()->first; }

private:
    std::map<int, FBEntry> entries_;
};

/// dim M(W)_k = sum_d C(k,d) dim W_d.
inline Integer free_fi_dim(const FBData& gen, int k) {
    Integer total = 0;
    for (const auto& [d, entry] : gen.entries()) total += binomial(k, d) * entry.dimension();
    return total;
}

/// dim M^{FIM+}(d)_k.
inline Integer free_fimplus_dim(int d, int k) { return hom_dim_fimplus(d, k); }

/// An FI-module on degrees 0..N given by the adjacent transpositions in each
/// degree and the standard inclusions [k] -> [k+1].
class PresentedFIModule {
public:
    PresentedFIModule(std::vector<SymmetricGroupRep> reps, std::vector<IntMatrix> inclusions)
        : reps_(std::move(reps)), incl_(std::move(inclusions)) {
        if (reps_.empty()) throw std::invalid_argument("module needs degree 0");
        if (incl_.size() + 1 != reps_.size()) throw std::invalid_argument("need one inclusion map per consecutive pair of degrees");
        for (std::size_t k = 0; k < reps_.size(); ++k)
            if (reps_[k].degree() != static_cast<int>(k)) throw std::invalid_argument("degree " + std::to_string(k) + " carries a representation of the wrong group");
        for (std::size_t k = 0; k < incl_.size(); ++k) {
            const auto& m = incl_[k];
            if (static_cast<int>(m.size()) != dim(static_cast<int>(k) + 1))
                throw std::invalid_argument("inclusion " + std::to_string(k) + " has the wrong number of rows");
            for (const auto& row : m)
                if (static_cast<int>(row.size()) != dim(static_cast<int>(k))) throw std::invalid_argument("inclusion has the wrong number of columns");
            // iota s_i = s_i iota for transpositions inside [k].
            for (std::size_t i = 0; i + 1 < k; ++i)
                if (matmul(m, reps_[k].generators()[i]) != matmul(reps_[k + 1].generators()[i], m))
                    throw std::invalid_argument("inclusion " + std::to_string(k) + " is not equivariant");
        }
        // The transposition of the two new points fixes the image of [k] -> [k+2].
        for (std::size_t k = 0; k + 2 < reps_.size(); ++k) {
            IntMatrix twice = matmul(incl_[k + 1], incl_[k]);
            if (matmul(reps_[k + 2].generators()[k], twice) != twice)
                throw std::invalid_argument("transposition (" + std::to_string(k + 1) + " " + std::to_string(k + 2) +
                                            ") moves the image of degree " + std::to_string(k));
        }
    }

    int top_degree() const { return static_cast<int>(reps_.size()) - 1; }
    int dim(int k) const { return (k < 0 || k > top_degree()) ? 0 : reps_[static_cast<std::size_t>(k)].dim(); }
    const SymmetricGroupRep& symmetric_action(int k) const { return reps_.at(static_cast<std::size_t>(k)); }
    const IntMatrix& inclusion(int k) const { return incl_.at(static_cast<std::size_t>(k)); }

    /// V(f) for an injection f: [a] -> [b] given by images f(1..a) in 1..b.
    IntMatrix map_of(const std::vector<Label>& images, int b) const {
        const int a = static_cast<int>(images.size());
        if (a > b || b > top_degree()) throw std::invalid_argument("injection outside the presented degrees");
        // f = sigma o iota^{b-a}, sigma sending the new points to the complement in increasing order.
        Permutation sigma;
        std::vector<bool> used(static_cast<std::size_t>(b) + 1, false);
        for (Label x : images) {
            sigma.push_back(x - 1);
            used[static_cast<std::size_t>(x)] = true;
        }
        for (int x = 1; x <= b; ++x)
            if (!used[static_cast<std::size_t>(x)]) sigma.push_back(x - 1);
        IntMatrix m = identity_matrix(static_cast<std::size_t>(dim(a)));
        for (int k = a; k < b; ++k) m = matmul(inclusion(k), m);
        return matmul(reps_[static_cast<std::size_t>(b)].act(sigma), m);
    }

    /// M(W): degree k is one copy of W per d-subset A of [k]; sigma sends
    /// (A, w) to (sigma A, pi w) with pi the permutation of [d] induced through
    /// the increasing identifications of A and sigma A.
    static PresentedFIModule free_module(const SymmetricGroupRep& w, int top) {
        const int d = w.degree();
        std::vector<SymmetricGroupRep> reps;
        std::vector<IntMatrix> incl;
        std::vector<std::vector<std::vector<Label>>> subsets;
        for (int k = 0; k <= top; ++k) subsets.push_back(subsets_avoiding(GroundSet::standard(k), {}, d));
        auto index_of = [&](int k, const std::vector<Label>& a) {
            const auto& list = subsets[static_cast<std::size_t>(k)];
            return static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), a) - list.begin());
        };
        const std::size_t wd = static_cast<std::size_t>(w.dim());
        for (int k = 0; k <= top; ++k) {
            const auto& list = subsets[static_cast<std::size_t>(k)];
            const std::size_t n = list.size() * wd;
            std::vector<IntMatrix> gens;
            for (int i = 1; i < k; ++i) {
                IntMatrix g(n, std::vector<Integer>(n, 0));
                for (std::size_t s = 0; s < list.size(); ++s) {
                    std::vector<Label> image = list[s];
                    for (auto& x : image) x = (x == i) ? i + 1 : (x == i + 1 ? i : x);
                    std::vector<Label> sorted = image;
                    std::sort(sorted.begin(), sorted.end());
                    Permutation pi;
                    for (Label x : image)
                        pi.push_back(static_cast<int>(std::find(sorted.begin(), sorted.end(), x) - sorted.begin()));
                    const IntMatrix rho = w.act(pi);
                    const std::size_t t = index_of(k, sorted);
                    for (std::size_t u = 0; u < wd; ++u)
                        for (std::size_t v = 0; v < wd; ++v) g[t * wd + u][s * wd + v] = rho[u][v];
                }
                gens.push_back(std::move(g));
            }
            reps.emplace_back(k, static_cast<int>(n), std::move(gens));
            if (k < top) {
                const std::size_t rows = subsets[static_cast<std::size_t>(k) + 1].size() * wd;
                IntMatrix m(rows, std::vector<Integer>(n, 0));
                for (std::size_t s = 0; s < list.size(); ++s) {
                    const std::size_t t = index_of(k + 1, list[s]);
                    for (std::size_t u = 0; u < wd; ++u) m[t * wd + u][s * wd + u] = 1;
                }
                incl.push_back(std::move(m));
            }
        }
        return PresentedFIModule(std::move(reps), std::move(incl));
    }

    /// Z in every degree with trivial actions and inclusions multiplied by `scale`.
    static PresentedFIModule constant(int top, long scale = 1) {
        std::vector<SymmetricGroupRep> reps;
        std::vector<IntMatrix> incl;
        for (int k = 0; k <= top; ++k) {
            reps.push_back(SymmetricGroupRep::trivial(k));
            if (k < top) incl.push_back(IntMatrix{{Integer(scale)}});
        }
        return PresentedFIModule(std::move(reps), std::move(incl));
    }

private:
    std::vector<SymmetricGroupRep> reps_;
    std::vector<IntMatrix> incl_;
};

namespace detail {
inline void append_block(SparseMatrix& m, const IntMatrix& block, int col0) {
    for (std::size_t r = 0; r < block.size(); ++r)
        for (std::size_t c = 0; c < block[r].size(); ++c)
            if (block[r][c] != 0) m.add(static_cast<int>(r), col0 + static_cast<int>(c), block[r][c]);
}
}  // namespace detail

/// H_0^{FI}(V)_k: the cokernel of the sum of the images of V_{[k]-a}, a in [k].
inline DegreeHomology h0_fi(const PresentedFIModule& v, int k) {
    if (k < 0 || k > v.top_degree()) throw std::invalid_argument("h0_fi: degree outside the presented range");
    DegreeHomology h;
    h.degree = k;
    if (k == 0) {
        h.betti = v.dim(0);
        return h;
    }
    const int src = v.dim(k - 1);
    SparseMatrix m(v.dim(k), src * k);
    for (int a = 1; a <= k; ++a) {
        std::vector<Label> skip;
        for (int x = 1; x <= k; ++x)
            if (x != a) skip.push_back(x);
        detail::append_block(m, v.map_of(skip, k), (a - 1) * src);
    }
    m.canonicalize();
    const auto snf = smith_form(m);
    h.betti = v.dim(k) - snf.rank;
    h.torsion = snf.nontrivial;
    return h;
}

/// Inj(V)_[k]: degree p is the sum over f: {0..p} -> [k] of V on the
/// complement, identified with V_{k-p-1} in increasing order.
inline IntChainComplex inj_complex_of_module(const PresentedFIModule& v, int k) {
    const GroundSet s = GroundSet::standard(k);
    std::vector<int> dims;
    std::vector<std::vector<Word>> words;
    for (int p = -1; p < k; ++p) {
        words.push_back(enumerate_injections(p, s));
        dims.push_back(static_cast<int>(words.back().size()) * v.dim(k - p - 1));
    }
    std::vector<SparseMatrix> boundaries;
    for (int p = 0; p < k; ++p) {
        const auto& src = words[static_cast<std::size_t>(p + 1)];
        const auto& dst = words[static_cast<std::size_t>(p)];
        std::map<Word, int> index;
        for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], static_cast<int>(i));
        const int fiber_src = v.dim(k - p - 1);
        const int fiber_dst = v.dim(k - p);
        SparseMatrix m(dims[static_cast<std::size_t>(p)], dims[static_cast<std::size_t>(p + 1)]);
        for (std::size_t c = 0; c < src.size(); ++c) {
            std::vector<Label> comp = s.without(src[c]).elements();
            for (std::size_t i = 0; i < src[c].size(); ++i) {
                Word g = delete_letter(src[c], i);
                std::vector<Label> bigger = s.without(g).elements();
                std::vector<Label> images;
                for (Label x : comp)
                    images.push_back(static_cast<Label>(std::find(bigger.begin(), bigger.end(), x) - bigger.begin()) + 1);
                IntMatrix block = v.map_of(images, k - p);
                if (i % 2 == 1)
                    for (auto& row : block)
                        for (auto& x : row) x = -x;
                const int r0 = index.at(g) * fiber_dst;
                const int c0 = static_cast<int>(c) * fiber_src;
                for (std::size_t r = 0; r < block.size(); ++r)
                    for (std::size_t t = 0; t < block[r].size(); ++t)
                        if (block[r][t] != 0) m.add(r0 + static_cast<int>(r), c0 + static_cast<int>(t), block[r][t]);
            }
        }
        m.canonicalize();
        boundaries.push_back(std::move(m));
    }
    return IntChainComplex(-1, std::move(dims), std::move(boundaries));
}

/// E^2_{p,q}(k) dimensions: column -1 is gen_q(k); column p >= 0 is
/// C(k,p+1) h_{p+1} gen_q(k-p-1).
inline std::map<std::pair<int, int>, Integer> e2_page_dims(const std::map<int, FBData>& gen_by_q, int k) {
    std::map<std::pair<int, int>, Integer> table;
    for (const auto& [q, gen] : gen_by_q) {
        table[{-1, q}] = gen.dim(k);
        for (int p = 0; p < k; ++p) table[{p, q}] = binomial(k, p + 1) * derangements(p + 1) * gen.dim(k - p - 1);
    }
    return table;
}

/// H_0 and H_{-1} of Inj^2(M^{FIM+}(d))_[k] both vanish.
inline bool coequalizer_check(int d, int k) {
    const auto h = homology(inj2_complex(d, GroundSet::standard(k)));
    return h.at(0).is_zero() && h.at(-1).is_zero();
}

/// Smallest k in d, d+2, ..., kmax at which the coequalizer condition holds,
/// or -1 if none does. Other parities vanish trivially.
inline int first_coequalizer_degree(int d, int kmax) {
    for (int k = d; k <= kmax; k += 2)
        if (coequalizer_check(d, k)) return k;
    return -1;
}

}  // namespace injword
