#pragma once

// Integral representations of symmetric groups given by the matrices of the
// adjacent transpositions.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "injword/integer.hpp"

namespace injword {

using IntMatrix = std::vector<std::vector<Integer>>;

/// One-line notation on {0, ..., d-1}: p[i] is the image of i.
using Permutation = std::vector<int>;

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    IntMatrix c(n, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("matmul: shape mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    }
    return c;
}

inline Permutation identity_permutation(int d) {
    Permutation p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
}

inline Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

/// All permutations of {0..d-1} in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int d) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(d);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// A representation of S_d on Z^dim. generators[i] is the action of the
/// transposition (i, i+1).
class SymmetricGroupRep {
public:
    SymmetricGroupRep(int d, int dim, std::vector<IntMatrix> generators)
        : d_(d), dim_(dim), gens_(std::move(generators)) {
        if (d < 0 || dim < 0) throw std::invalid_argument("representation: negative size");
        if (static_cast<int>(gens_.size()) != std::max(d - 1, 0))
            throw std::invalid_argument("representation of S_" + std::to_string(d) + " needs " +
                                        std::to_string(std::max(d - 1, 0)) + " generator matrices");
        for (const auto& g : gens_) {
            if (static_cast<int>(g.size()) != dim) throw std::invalid_argument("generator matrix has wrong size");
            for (const auto& row : g)
                if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("generator matrix is not square");
        }
        const IntMatrix id = identity_matrix(static_cast<std::size_t>(dim));
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (matmul(gens_[i], gens_[i]) != id)
                throw std::invalid_argument("relation s_i^2 = 1 fails at i = " + std::to_string(i));
            for (std::size_t j = i + 1; j < gens_.size(); ++j) {
                IntMatrix st = matmul(gens_[i], gens_[j]);
                const int order = (j == i + 1) ? 3 : 2;
                IntMatrix pw = id;
                for (int t = 0; t < order; ++t) pw = matmul(pw, st);
                if (pw != id)
                    throw std::invalid_argument("braid relation fails for generators " + std::to_string(i) + ", " +
                                                std::to_string(j));
            }
        }
    }

    static SymmetricGroupRep trivial(int d) {
        return SymmetricGroupRep(d, 1, std::vector<IntMatrix>(static_cast<std::size_t>(std::max(d - 1, 0)), IntMatrix{{1}}));
    }
    static SymmetricGroupRep sign(int d) {
        return SymmetricGroupRep(d, 1, std::vector<IntMatrix>(static_cast<std::size_t>(std::max(d - 1, 0)), IntMatrix{{-1}}));
    }
    /// Z[S_d] with basis the permutations in lexicographic order, pi.e_s = e_{pi o s}.
    static SymmetricGroupRep regular(int d) {
        const auto perms = all_permutations(d);
        const std::size_t n = perms.size();
        std::vector<IntMatrix> gens;
        for (int i = 0; i + 1 < d; ++i) {
            Permutation s = identity_permutation(d);
            std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i) + 1]);
            IntMatrix g(n, std::vector<Integer>(n, 0));
            for (std::size_t c = 0; c < n; ++c) {
                auto target = compose(s, perms[c]);
                auto r = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), target) - perms.begin());
                g[r][c] = 1;
            }
            gens.push_back(std::move(g));
        }
        return SymmetricGroupRep(d, static_cast<int>(n), std::move(gens));
    }

    int degree() const { return d_; }
    int dim() const { return dim_; }
    const std::vector<IntMatrix>& generators() const { return gens_; }

    /// Matrix of an arbitrary permutation, from a reduced word.
    IntMatrix act(Permutation p) const {
        if (static_cast<int>(p.size()) != d_) throw std::invalid_argument("permutation of wrong degree");
        IntMatrix r = identity_matrix(static_cast<std::size_t>(dim_));
        for (;;) {
            std::size_t i = 0;
            while (i + 1 < p.size() && p[i] < p[i + 1]) ++i;
            if (i + 1 >= p.size()) break;
            std::swap(p[i], p[i + 1]);  // p = p' o s_i
            r = matmul(gens_[i], r);
        }
        return r;
    }

    Integer character(const Permutation& p) const {
        IntMatrix m = act(p);
        Integer t = 0;
        for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
        return t;
    }

private:
    int d_;
    int dim_;
    std::vector<IntMatrix> gens_;
};

}  // namespace injword
