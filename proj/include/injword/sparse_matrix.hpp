#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "injword/integer.hpp"

namespace injword {

struct Triplet {
    int row = 0;
    int col = 0;
    Integer value;
    bool operator==(const Triplet&) const = default;
};

/// Integer matrix in triplet form. Canonical: sorted by (col, row), no
/// duplicate positions, no zero values.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }
    SparseMatrix(int rows, int cols, std::vector<Triplet> entries) : SparseMatrix(rows, cols) {
        entries_ = std::move(entries);
        canonicalize();
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Triplet>& entries() const { return entries_; }
    std::size_t nonzeros() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    void add(int r, int c, const Integer& v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of shape");
        entries_.push_back({r, c, v});
    }

    /// Merges duplicates and drops zeros; call after a batch of add().
    void canonicalize() {
        for (const auto& t : entries_)
            if (t.row < 0 || t.row >= rows_ || t.col < 0 || t.col >= cols_)
                throw std::out_of_range("matrix entry out of shape");
        std::sort(entries_.begin(), entries_.end(), [](const Triplet& a, const Triplet& b) {
            return std::tie(a.col, a.row) < std::tie(b.col, b.row);
        });
        std::vector<Triplet> merged;
        merged.reserve(entries_.size());
        for (auto& t : entries_) {
            if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
                merged.back().value += t.value;
            else
                merged.push_back(std::move(t));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Triplet& t) { return t.value == 0; }),
                     merged.end());
        entries_ = std::move(merged);
    }

    SparseMatrix transpose() const {
        std::vector<Triplet> t;
        t.reserve(entries_.size());
        for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
        return SparseMatrix(cols_, rows_, std::move(t));
    }

    std::vector<std::vector<Integer>> to_dense() const {
        std::vector<std::vector<Integer>> d(static_cast<std::size_t>(rows_),
                                            std::vector<Integer>(static_cast<std::size_t>(cols_), 0));
        for (const auto& e : entries_) d[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] += e.value;
        return d;
    }

    static SparseMatrix from_dense(const std::vector<std::vector<Integer>>& d, int cols = -1) {
        const int r = static_cast<int>(d.size());
        const int c = cols >= 0 ? cols : (r == 0 ? 0 : static_cast<int>(d[0].size()));
        SparseMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                    m.add(i, j, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        m.canonicalize();
        return m;
    }

    /// Column c as (row, value) pairs. Requires canonical form.
    std::vector<std::pair<int, Integer>> column(int c) const {
        std::vector<std::pair<int, Integer>> out;
        auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                                   [](const Triplet& t, int col) { return t.col < col; });
        for (; it != entries_.end() && it->col == c; ++it) out.emplace_back(it->row, it->value);
        return out;
    }

    bool operator==(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || entries_.size() != o.entries_.size()) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].row != o.entries_[i].row || entries_[i].col != o.entries_[i].col ||
                entries_[i].value != o.entries_[i].value)
                return false;
        return true;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Triplet> entries_;
};

/// Product a * b.
inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: shape mismatch " + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()));
    // Rows of a indexed by column for the inner join.
    std::vector<std::vector<std::pair<int, const Integer*>>> a_by_col(static_cast<std::size_t>(a.cols()));
    for (const auto& e : a.entries()) a_by_col[static_cast<std::size_t>(e.col)].emplace_back(e.row, &e.value);
    std::vector<Triplet> out;
    std::map<int, Integer> acc;
    int current_col = -1;
    auto flush = [&]() {
        for (auto& [r, v] : acc)
            if (v != 0) out.push_back({r, current_col, v});
        acc.clear();
    };
    for (const auto& e : b.entries()) {
        if (e.col != current_col) {
            flush();
            current_col = e.col;
        }
        for (const auto& [r, v] : a_by_col[static_cast<std::size_t>(e.row)]) acc[r] += (*v) * e.value;
    }
    flush();
    return SparseMatrix(a.rows(), b.cols(), std::move(out));
}

/// Integer matrix-vector product for dense vectors.
inline std::vector<Integer> apply(const SparseMatrix& m, const std::vector<Integer>& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("apply: length mismatch");
    std::vector<Integer> y(static_cast<std::size_t>(m.rows()), 0);
    for (const auto& e : m.entries()) y[static_cast<std::size_t>(e.row)] += e.value * x[static_cast<std::size_t>(e.col)];
    return y;
}

}  // namespace injword
