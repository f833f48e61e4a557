#pragma once

// Bounded chain complexes of finitely generated free abelian groups and their
// integral homology.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "injword/integer.hpp"
#include "injword/smith.hpp"
#include "injword/sparse_matrix.hpp"

namespace injword {

/// C_lo <- ... <- C_hi with boundary(q): C_q -> C_{q-1} for lo < q <= hi.
class IntChainComplex {
public:
    IntChainComplex() = default;

    /// boundaries[i] is the differential out of degree lo + 1 + i.
    IntChainComplex(int lo, std::vector<int> dims, std::vector<SparseMatrix> boundaries,
                    std::vector<std::vector<std::string>> labels = {})
        : lo_(lo), dims_(std::move(dims)), boundaries_(std::move(boundaries)), labels_(std::move(labels)) {
        if (dims_.empty()) throw std::invalid_argument("chain complex needs at least one degree");
        if (boundaries_.size() + 1 != dims_.size())
            throw std::invalid_argument("chain complex: expected " + std::to_string(dims_.size() - 1) + " boundary maps");
        for (int q = lo_ + 1; q <= hi(); ++q) {
            const auto& d = boundary(q);
            if (d.rows() != dim(q - 1) || d.cols() != dim(q))
                throw std::invalid_argument("chain complex: boundary out of degree " + std::to_string(q) +
                                            " has shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
        }
        if (!labels_.empty()) {
            if (labels_.size() != dims_.size()) throw std::invalid_argument("chain complex: label list per degree expected");
            for (std::size_t i = 0; i < dims_.size(); ++i)
                if (static_cast<int>(labels_[i].size()) != dims_[i])
                    throw std::invalid_argument("chain complex: label count differs from dimension");
        }
        for (int q = lo_ + 2; q <= hi(); ++q)
            if (!multiply(boundary(q - 1), boundary(q)).is_zero())
                throw std::invalid_argument("chain complex: boundary squares to nonzero at degree " + std::to_string(q));
    }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    int dim(int q) const { return (q < lo_ || q > hi()) ? 0 : dims_[static_cast<std::size_t>(q - lo_)]; }
    const std::vector<int>& dims() const { return dims_; }

    /// The differential C_q -> C_{q-1}; a zero matrix of the right shape outside the stored range.
    SparseMatrix boundary(int q) const {
        if (q <= lo_ || q > hi()) return SparseMatrix(dim(q - 1), dim(q));
        return boundaries_[static_cast<std::size_t>(q - lo_ - 1)];
    }
    const std::vector<SparseMatrix>& boundaries() const { return boundaries_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels(int q) const { return labels_.at(static_cast<std::size_t>(q - lo_)); }

private:
    int lo_ = 0;
    std::vector<int> dims_{0};
    std::vector<SparseMatrix> boundaries_;
    std::vector<std::vector<std::string>> labels_;
};

struct DegreeHomology {
    int degree = 0;
    long betti = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool operator==(const DegreeHomology&) const = default;
};

struct HomologySummary {
    int lo = 0;
    std::vector<DegreeHomology> degrees;

    int hi() const { return lo + static_cast<int>(degrees.size()) - 1; }
    DegreeHomology at(int q) const {
        if (q < lo || q > hi()) return DegreeHomology{q, 0, {}};
        return degrees[static_cast<std::size_t>(q - lo)];
    }
    /// True when every degree other than q has zero homology.
    bool concentrated_in(int q) const {
        for (const auto& d : degrees)
            if (d.degree != q && !d.is_zero()) return false;
        return true;
    }
    bool vanishes_through(int q) const {
        for (const auto& d : degrees)
            if (d.degree <= q && !d.is_zero()) return false;
        return true;
    }
    bool torsion_free() const {
        for (const auto& d : degrees)
            if (!d.torsion.empty()) return false;
        return true;
    }
    long total_betti() const {
        long s = 0;
        for (const auto& d : degrees) s += d.betti;
        return s;
    }
    /// Equal degreewise after padding with zero groups.
    bool same_as(const HomologySummary& o) const {
        const int a = std::min(lo, o.lo);
        const int b = std::max(hi(), o.hi());
        for (int q = a; q <= b; ++q) {
            auto x = at(q), y = o.at(q);
            if (x.betti != y.betti || x.torsion != y.torsion) return false;
        }
        return true;
    }
};

/// H_q = ker d_q / im d_{q+1}: betti = dim C_q - rank d_q - rank d_{q+1},
/// torsion = invariant factors > 1 of d_{q+1}.
inline HomologySummary homology(const IntChainComplex& c) {
    std::map<int, SmithForm> forms;
    for (int q = c.lo() + 1; q <= c.hi(); ++q) forms.emplace(q, smith_form(c.boundary(q)));
    HomologySummary out;
    out.lo = c.lo();
    for (int q = c.lo(); q <= c.hi(); ++q) {
        DegreeHomology h;
        h.degree = q;
        long rank_out = forms.count(q) ? forms.at(q).rank : 0;
        long rank_in = forms.count(q + 1) ? forms.at(q + 1).rank : 0;
        h.betti = c.dim(q) - rank_out - rank_in;
        if (forms.count(q + 1)) h.torsion = forms.at(q + 1).nontrivial;
        out.degrees.push_back(std::move(h));
    }
    return out;
}

}  // namespace injword
