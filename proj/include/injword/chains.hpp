#pragma once

// The complexes of injective words used throughout: Inj(S), its oriented
// variant Inj+(S) with the comparison isomorphism, the relative complexes
// Inj(M(d))_S, the twisted complexes Inj(M(W))_S, and the secondary
// complexes Inj^2(M^{FIM+}(d))_S. All are augmented: degree -1 is present.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "injword/chain_complex.hpp"
#include "injword/combinatorics.hpp"
#include "injword/fimplus.hpp"
#include "injword/liealg.hpp"
#include "injword/report.hpp"
#include "injword/smith.hpp"
#include "injword/symrep.hpp"

namespace injword {

/// Assembles a complex with degrees lo..lo+bases.size()-1 from ordered bases
/// and a face rule. faces(q, key, emit) calls emit(target_key, coefficient)
/// for each term of the boundary of `key`, which lives in degree q.
template <class Key, class Faces, class Label_>
IntChainComplex assemble_complex(int lo, const std::vector<std::vector<Key>>& bases, Faces faces, Label_ label) {
    std::vector<int> dims;
    std::vector<std::vector<std::string>> labels;
    for (const auto& b : bases) {
        dims.push_back(static_cast<int>(b.size()));
        std::vector<std::string> l;
        l.reserve(b.size());
        for (const auto& key : b) l.push_back(label(key));
        labels.push_back(std::move(l));
    }
    std::vector<SparseMatrix> boundaries;
    for (std::size_t i = 1; i < bases.size(); ++i) {
        std::map<Key, int> index;
        for (std::size_t r = 0; r < bases[i - 1].size(); ++r) index.emplace(bases[i - 1][r], static_cast<int>(r));
        SparseMatrix m(dims[i - 1], dims[i]);
        const int q = lo + static_cast<int>(i);
        for (std::size_t c = 0; c < bases[i].size(); ++c) {
            faces(q, bases[i][c], [&](const Key& target, int coeff) {
                auto it = index.find(target);
                if (it == index.end()) throw std::logic_error("face lands outside the basis in degree " + std::to_string(q - 1));
                m.add(it->second, static_cast<int>(c), coeff);
            });
        }
        m.canonicalize();
        boundaries.push_back(std::move(m));
    }
    return IntChainComplex(lo, std::move(dims), std::move(boundaries), std::move(labels));
}

inline Word delete_letter(const Word& w, std::size_t i) {
    Word v;
    v.reserve(w.size() - 1);
    for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i) v.push_back(w[j]);
    return v;
}

inline IntChainComplex zero_complex(int lo = -1) { return IntChainComplex(lo, {0}, {}); }

/// Inj(S): degree q has the injective words of length q+1; D = sum (-1)^i d_i.
inline IntChainComplex inj_complex(const GroundSet& s) {
    std::vector<std::vector<Word>> bases;
    for (int q = -1; q < s.size(); ++q) bases.push_back(enumerate_injections(q, s));
    return assemble_complex(
        -1, bases,
        [](int, const Word& w, const auto& emit) {
            for (std::size_t i = 0; i < w.size(); ++i) emit(delete_letter(w, i), i % 2 == 0 ? 1 : -1);
        },
        [](const Word& w) { return w.empty() ? std::string("()") : WordPolynomial::word_string(w); });
}

/// The boundary D on word polynomials; a single letter maps to the empty word.
inline WordPolynomial inj_boundary(const WordPolynomial& x) {
    if (x.degree() == 0) return WordPolynomial(0);
    WordPolynomial out(x.degree() - 1);
    for (const auto& [w, c] : x.terms())
        for (std::size_t i = 0; i < w.size(); ++i) out.add_term(delete_letter(w, i), i % 2 == 0 ? c : Integer(-c));
    return out;
}

/// D(ac) = D(a)c + (-1)^{|a|} a D(c).
inline bool leibniz_check(const WordPolynomial& a, const WordPolynomial& c) {
    WordPolynomial lhs = inj_boundary(concatenate(a, c));
    WordPolynomial rhs = concatenate(inj_boundary(a), c);
    WordPolynomial second = concatenate(a, inj_boundary(c));
    if (a.degree() % 2 == 0)
        rhs += second;
    else
        rhs -= second;
    return lhs == rhs;
}

/// Checks that the L-products are cycles spanning a saturated subgroup whose
/// rank is the top Betti number of Inj([k]).
inline Report verify_top_homology(int k) {
    Report rep("top homology basis, k=" + std::to_string(k));
    const auto basis = lproduct_basis(k);
    std::vector<WordPolynomial> expansions;
    for (const auto& p : basis) expansions.push_back(p.expand());
    for (std::size_t i = 0; i < expansions.size(); ++i)
        rep.check(inj_boundary(expansions[i]).is_zero(), "not a cycle: " + basis[i].to_string());
    rep.check(Integer(static_cast<long>(basis.size())) == derangements(k),
              "basis size " + std::to_string(basis.size()) + " differs from derangements " + to_string(derangements(k)));
    const auto h = homology(inj_complex(GroundSet::standard(k))).at(k - 1);
    const auto m = expansion_matrix(expansions, enumerate_injections(k - 1, GroundSet::standard(k)));
    const auto snf = smith_form(m);
    rep.check(snf.rank == h.betti, "span rank " + std::to_string(snf.rank) + " vs betti " + std::to_string(h.betti));
    rep.check(snf.rank == static_cast<long>(basis.size()), "L-products are linearly dependent");
    rep.check(snf.nontrivial.empty(), "span is not saturated");
    rep.note("basis_size", std::to_string(basis.size()));
    rep.note("betti", std::to_string(h.betti));
    rep.note("span_rank", std::to_string(snf.rank));
    return rep;
}

/// Inj+(S): a word a_0..a_p paired with the wedge of its complement in
/// increasing order. d+_i moves a_i to the front of the wedge; re-sorting
/// contributes (-1)^{#complement letters below a_i}. The differential is the
/// plain sum of the d+_i.
inline IntChainComplex inj_plus_complex(const GroundSet& s) {
    std::vector<std::vector<Word>> bases;
    for (int q = -1; q < s.size(); ++q) bases.push_back(enumerate_injections(q, s));
    auto complement = [&](const Word& w) {
        std::vector<Label> c = s.without(w).elements();
        std::sort(c.begin(), c.end());
        return c;
    };
    return assemble_complex(
        -1, bases,
        [&](int, const Word& w, const auto& emit) {
            const auto comp = complement(w);
            for (std::size_t i = 0; i < w.size(); ++i) {
                const auto below = std::count_if(comp.begin(), comp.end(), [&](Label b) { return b < w[i]; });
                emit(delete_letter(w, i), below % 2 == 0 ? 1 : -1);
            }
        },
        [&](const Word& w) {
            std::string wedge;
            for (Label b : complement(w)) wedge += (wedge.empty() ? "" : "^") + std::to_string(b);
            return (w.empty() ? std::string("()") : WordPolynomial::word_string(w)) + "|" + (wedge.empty() ? "0" : wedge);
        });
}

/// Degreewise maps f_q: C_q -> D_q for q = lo, lo+1, ...
struct ChainMap {
    int lo = 0;
    std::vector<SparseMatrix> components;

    SparseMatrix at(int q) const { return components.at(static_cast<std::size_t>(q - lo)); }
    int hi() const { return lo + static_cast<int>(components.size()) - 1; }
};

/// f_{q-1} d_q = d'_q f_q in every degree.
inline bool is_chain_map(const ChainMap& f, const IntChainComplex& src, const IntChainComplex& dst) {
    for (int q = f.lo + 1; q <= f.hi(); ++q)
        if (!(multiply(f.at(q - 1), src.boundary(q)) == multiply(dst.boundary(q), f.at(q)))) return false;
    return true;
}

/// Every component is a signed permutation matrix.
inline bool is_signed_bijection(const ChainMap& f) {
    for (const auto& m : f.components) {
        if (m.rows() != m.cols() || static_cast<int>(m.nonzeros()) != m.cols()) return false;
        std::vector<int> row_hits(static_cast<std::size_t>(m.rows()), 0);
        std::vector<int> col_hits(static_cast<std::size_t>(m.cols()), 0);
        for (const auto& e : m.entries()) {
            if (e.value != 1 && e.value != -1) return false;
            if (++row_hits[static_cast<std::size_t>(e.row)] > 1 || ++col_hits[static_cast<std::size_t>(e.col)] > 1) return false;
        }
    }
    return true;
}

/// Phi(a_0..a_p) = eps_w (-1)^{p(p+1)/2} a_0..a_p (x) b_1^...^b_m, with eps_w
/// the sign of a_0..a_p b_1..b_m against increasing order.
inline ChainMap phi_isomorphism(const GroundSet& s) {
    ChainMap phi;
    phi.lo = -1;
    for (int p = -1; p < s.size(); ++p) {
        const auto words = enumerate_injections(p, s);
        SparseMatrix m(static_cast<int>(words.size()), static_cast<int>(words.size()));
        const int tri = ((p * (p + 1)) / 2) % 2 == 0 ? 1 : -1;
        for (std::size_t j = 0; j < words.size(); ++j) {
            std::vector<Label> seq = words[j];
            std::vector<Label> comp = s.without(words[j]).elements();
            std::sort(comp.begin(), comp.end());
            seq.insert(seq.end(), comp.begin(), comp.end());
            m.add(static_cast<int>(j), static_cast<int>(j), permutation_sign(seq) * tri);
        }
        m.canonicalize();
        phi.components.push_back(std::move(m));
    }
    return phi;
}

using RelativeCell = std::pair<Word, Word>;  // (f on {0..p}, g on [d])

/// Inj(M(d))_S: pairs of disjoint injections f: {0..p} -> S, g: [d] -> S,
/// with faces acting on f.
inline IntChainComplex inj_d_complex(int d, const GroundSet& s) {
    if (d < 0 || d > s.size()) return zero_complex();
    std::vector<std::vector<RelativeCell>> bases;
    for (int p = -1; p <= s.size() - d - 1; ++p) {
        std::vector<RelativeCell> b;
        for (const auto& f : enumerate_injections(p, s))
            for (const auto& g : enumerate_injections(d - 1, s.without(f))) b.emplace_back(f, g);
        bases.push_back(std::move(b));
    }
    return assemble_complex(
        -1, bases,
        [](int, const RelativeCell& cell, const auto& emit) {
            for (std::size_t i = 0; i < cell.first.size(); ++i)
                emit(RelativeCell{delete_letter(cell.first, i), cell.second}, i % 2 == 0 ? 1 : -1);
        },
        [](const RelativeCell& cell) {
            return (cell.first.empty() ? std::string("()") : WordPolynomial::word_string(cell.first)) + ";" +
                   (cell.second.empty() ? std::string("()") : WordPolynomial::word_string(cell.second));
        });
}

/// d-element subsets of S minus `used`, each sorted, in lexicographic order.
inline std::vector<std::vector<Label>> subsets_avoiding(const GroundSet& s, const Word& used, int d) {
    const std::vector<Label> pool = s.without(used).elements();
    std::vector<std::vector<Label>> out;
    if (d < 0 || d > static_cast<int>(pool.size())) return out;
    std::vector<int> idx(static_cast<std::size_t>(d));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == d) {
            std::vector<Label> a;
            for (int i : idx) a.push_back(pool[static_cast<std::size_t>(i)]);
            std::sort(a.begin(), a.end());
            out.push_back(std::move(a));
            return;
        }
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

/// Inj(M(W))_S for a representation W of S_d. The fiber over f is one copy of
/// W per d-subset A of the complement, identified with [d] in increasing
/// order. A face map includes the complement into a larger one and fixes A,
/// so the induced permutation of [d] is trivial and the map is the identity
/// on each copy of W.
inline IntChainComplex twisted_inj_complex(const SymmetricGroupRep& w, const GroundSet& s) {
    const int d = w.degree();
    if (d > s.size()) return zero_complex();
    using Cell = std::pair<std::pair<Word, std::vector<Label>>, int>;
    std::vector<std::vector<Cell>> bases;
    for (int p = -1; p <= s.size() - d - 1; ++p) {
        std::vector<Cell> b;
        for (const auto& f : enumerate_injections(p, s))
            for (const auto& a : subsets_avoiding(s, f, d))
                for (int j = 0; j < w.dim(); ++j) b.push_back({{f, a}, j});
        bases.push_back(std::move(b));
    }
    return assemble_complex(
        -1, bases,
        [](int, const Cell& cell, const auto& emit) {
            const Word& f = cell.first.first;
            for (std::size_t i = 0; i < f.size(); ++i)
                emit(Cell{{delete_letter(f, i), cell.first.second}, cell.second}, i % 2 == 0 ? 1 : -1);
        },
        [](const Cell& cell) {
            std::string a;
            for (Label x : cell.first.second) a += (a.empty() ? "" : ",") + std::to_string(x);
            return (cell.first.first.empty() ? std::string("()") : WordPolynomial::word_string(cell.first.first)) + ";{" +
                   a + "};w" + std::to_string(cell.second);
        });
}

/// The cell-wise isomorphism Inj(M(d))_S -> Inj(M(Z[S_d]))_S sending
/// (f, g) to (f, A, pi) with A = image of g and g = (A in increasing order) o pi.
inline ChainMap regular_identification(int d, const GroundSet& s) {
    ChainMap iso;
    iso.lo = -1;
    if (d < 0 || d > s.size()) {
        iso.components.emplace_back(0, 0);
        return iso;
    }
    const auto perms = all_permutations(d);
    for (int p = -1; p <= s.size() - d - 1; ++p) {
        std::map<std::tuple<Word, std::vector<Label>, std::size_t>, int> target;
        int row = 0;
        for (const auto& f : enumerate_injections(p, s))
            for (const auto& a : subsets_avoiding(s, f, d))
                for (std::size_t j = 0; j < perms.size(); ++j) target[{f, a, j}] = row++;
        SparseMatrix m(row, row);
        int col = 0;
        for (const auto& f : enumerate_injections(p, s))
            for (const auto& g : enumerate_injections(d - 1, s.without(f))) {
                std::vector<Label> a = g;
                std::sort(a.begin(), a.end());
                Permutation pi;
                for (Label x : g) pi.push_back(static_cast<int>(std::lower_bound(a.begin(), a.end(), x) - a.begin()));
                const auto j = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), pi) - perms.begin());
                m.add(target.at({f, a, j}), col++, 1);
            }
        m.canonicalize();
        iso.components.push_back(std::move(m));
    }
    return iso;
}

/// Checks Inj(M(W))_S against H(Inj(M(d))_S) (x)_{S_d} W. The right-hand
/// rank is computed from the kernel of the top boundary of Inj(M(d))_S and an
/// explicit coinvariant quotient of Q[S_d] (x) W.
inline Report verify_connectedMW(const SymmetricGroupRep& w, const GroundSet& s) {
    const int d = w.degree();
    const int top = s.size() - 1 - d;
    Report rep("connectivity of Inj(M(W)), d=" + std::to_string(d) + ", |S|=" + std::to_string(s.size()));
    const auto twisted = homology(twisted_inj_complex(w, s));
    rep.check(twisted.concentrated_in(top), "homology not concentrated in degree " + std::to_string(top));

    // Kernel of the top boundary of Inj(M(d))_S; its faces keep g fixed.
    const auto relative = inj_d_complex(d, s);
    long kernel = relative.dim(top);
    if (top > -1) {
        const auto bd = relative.boundary(top);
        for (const auto& e : bd.entries()) {
            const auto& src = relative.labels(top)[static_cast<std::size_t>(e.col)];
            const auto& dst = relative.labels(top - 1)[static_cast<std::size_t>(e.row)];
            if (src.substr(src.find(';')) != dst.substr(dst.find(';'))) {
                rep.check(false, "boundary mixes different g");
                break;
            }
        }
        kernel -= smith_form(bd).rank;
    }
    const long group_order = factorial(static_cast<unsigned>(d)).get_si();
    rep.check(kernel % group_order == 0, "kernel rank not divisible by d!");

    // Coinvariants of Q[S_d] (x) W under e_s t (x) v ~ e_s (x) t v, t ranging over generators.
    const auto perms = all_permutations(d);
    const int n = static_cast<int>(perms.size()) * w.dim();
    SparseMatrix rel(n, std::max(n * (d - 1), 0));
    int col = 0;
    for (int t = 0; t + 1 < d; ++t) {
        Permutation tau = identity_permutation(d);
        std::swap(tau[static_cast<std::size_t>(t)], tau[static_cast<std::size_t>(t) + 1]);
        const auto& mat = w.generators()[static_cast<std::size_t>(t)];
        for (std::size_t si = 0; si < perms.size(); ++si) {
            const auto moved = compose(perms[si], tau);
            const auto mi = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), moved) - perms.begin());
            for (int v = 0; v < w.dim(); ++v, ++col) {
                rel.add(static_cast<int>(mi) * w.dim() + v, col, 1);
                for (int u = 0; u < w.dim(); ++u)
                    if (mat[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0)
                        rel.add(static_cast<int>(si) * w.dim() + u, col, -mat[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
            }
        }
    }
    rel.canonicalize();
    const long coinvariants = n - smith_form(rel).rank;
    const long expected = kernel / group_order * coinvariants;
    const long observed = twisted.at(top).betti;
    rep.check(observed == expected,
              "top rank " + std::to_string(observed) + " vs tensor formula " + std::to_string(expected));
    rep.note("degree", std::to_string(top));
    rep.note("rank", std::to_string(observed));
    rep.note("tensor_rank", std::to_string(expected));
    return rep;
}

/// A cell of Inj^2: ordered blocks A_0..A_p and a basis element (f, matching)
/// of M^{FIM+}(d) on the remaining set.
struct SecondaryCell {
    std::vector<Block> tuple;
    Word f;
    std::vector<Block> matching;
    auto operator<=>(const SecondaryCell&) const = default;
};

/// Ordered tuples of n disjoint 2-blocks of S, lexicographic.
inline std::vector<std::vector<Block>> ordered_block_tuples(const GroundSet& s, int n) {
    std::vector<std::vector<Block>> out;
    std::vector<Block> cur;
    std::vector<Label> elems = s.elements();
    std::sort(elems.begin(), elems.end());
    std::vector<bool> used(elems.size(), false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (used[i]) continue;
            for (std::size_t j = i + 1; j < elems.size(); ++j) {
                if (used[j]) continue;
                used[i] = used[j] = true;
                cur.emplace_back(elems[i], elems[j]);
                rec();
                cur.pop_back();
                used[i] = used[j] = false;
            }
        }
    };
    rec();
    return out;
}

/// Inj^2(M^{FIM+}(d))_S. The face d_i deletes A_i and acts on the fiber by
/// the FIM+ morphism (inclusion, A_i), which prepends A_i to the matching;
/// sorting it back into place costs (-1)^{#blocks with smaller minimum}.
/// Because the prepended blocks anticommute, the faces are summed without
/// alternating signs, exactly as in Inj+; the alternating sum does not square
/// to zero. Degree -1 is M^{FIM+}(d)_S itself.
inline IntChainComplex inj2_complex(int d, const GroundSet& s) {
    if (d < 0 || d > s.size() || (s.size() - d) % 2 != 0) return zero_complex();
    const int b = (s.size() - d) / 2;
    std::vector<std::vector<SecondaryCell>> bases;
    for (int p = -1; p <= b - 1; ++p) {
        std::vector<SecondaryCell> cells;
        for (const auto& tuple : ordered_block_tuples(s, p + 1)) {
            Word used;
            for (const auto& blk : tuple) {
                used.push_back(blk.first);
                used.push_back(blk.second);
            }
            for (const auto& [f, z] : fimplus_free_basis(d, s.without(used))) cells.push_back({tuple, f, z.blocks});
        }
        bases.push_back(std::move(cells));
    }
    return assemble_complex(
        -1, bases,
        [](int, const SecondaryCell& cell, const auto& emit) {
            for (std::size_t i = 0; i < cell.tuple.size(); ++i) {
                SecondaryCell t;
                t.tuple = cell.tuple;
                t.tuple.erase(t.tuple.begin() + static_cast<std::ptrdiff_t>(i));
                t.f = cell.f;
                const Block& a = cell.tuple[i];
                t.matching = cell.matching;
                const auto below = std::count_if(t.matching.begin(), t.matching.end(),
                                                  [&](const Block& blk) { return blk.first < a.first; });
                t.matching.insert(t.matching.begin() + below, a);
                emit(t, below % 2 == 0 ? 1 : -1);
            }
        },
        [](const SecondaryCell& cell) {
            auto blocks = [](const std::vector<Block>& bs) {
                std::string out;
                for (const auto& blk : bs) out += "{" + std::to_string(blk.first) + "," + std::to_string(blk.second) + "}";
                return out.empty() ? std::string("0") : out;
            };
            return blocks(cell.tuple) + ";" + (cell.f.empty() ? std::string("()") : WordPolynomial::word_string(cell.f)) +
                   ";" + blocks(cell.matching);
        });
}

/// Compares Inj^2(M^{FIM+}(d))_S with the direct sum over (f, Z) of Inj+(Z),
/// Z a perfect matching of S - im f viewed as a set of blocks.
inline Report verify_structure_inj2(int d, const GroundSet& s) {
    Report rep("structure of Inj^2(M(d)), d=" + std::to_string(d) + ", |S|=" + std::to_string(s.size()));
    const auto lhs = inj2_complex(d, s);
    const auto lhs_h = homology(lhs);
    const auto summands = fimplus_free_basis(d, s);
    const long count = static_cast<long>(summands.size());
    HomologySummary rhs_h;
    rhs_h.lo = -1;
    std::vector<long> rhs_dims;
    if (count > 0) {
        const int b = (s.size() - d) / 2;
        const auto piece = inj_plus_complex(GroundSet::standard(b));
        const auto piece_h = homology(piece);
        for (int p = -1; p <= piece.hi(); ++p) {
            rhs_dims.push_back(count * piece.dim(p));
            DegreeHomology h = piece_h.at(p);
            h.betti *= count;
            std::vector<Integer> tors;
            for (long i = 0; i < count; ++i) tors.insert(tors.end(), h.torsion.begin(), h.torsion.end());
            std::sort(tors.begin(), tors.end());
            h.torsion = tors;
            rhs_h.degrees.push_back(h);
        }
    }
    const int hi = std::max(lhs.hi(), -1 + static_cast<int>(rhs_dims.size()) - 1);
    for (int p = -1; p <= hi; ++p) {
        const long r = (p + 1 < static_cast<int>(rhs_dims.size())) ? rhs_dims[static_cast<std::size_t>(p + 1)] : 0;
        rep.check(lhs.dim(p) == r, "dimension mismatch in degree " + std::to_string(p) + ": " + std::to_string(lhs.dim(p)) +
                                       " vs " + std::to_string(r));
    }
    rep.check(lhs_h.same_as(rhs_h), "homology differs from the direct sum of Inj+ complexes");
    rep.note("summands", std::to_string(count));
    return rep;
}

}  // namespace injword
