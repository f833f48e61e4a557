#pragma once

// Smith normal form of sparse integer matrices.
//
// Unit entries are eliminated first with sparse row operations (a unit pivot
// splits off an invariant factor 1 without changing the rest of the form).
// The remainder, which has no unit entries, goes through a dense
// gcd-based reduction. The sparse phase runs on overflow-checked 64-bit words
// and restarts on GMP integers if any intermediate value leaves that range.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "injword/integer.hpp"
#include "injword/sparse_matrix.hpp"

namespace injword {

struct SmithForm {
    int rows = 0;
    int cols = 0;
    long rank = 0;
    long unit_count = 0;               // invariant factors equal to 1
    std::vector<Integer> nontrivial;   // invariant factors > 1, in divisibility order

    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> all(static_cast<std::size_t>(unit_count), Integer(1));
        all.insert(all.end(), nontrivial.begin(), nontrivial.end());
        return all;
    }
    /// Square, full rank, all invariant factors 1.
    bool unimodular() const { return rows == cols && rank == rows && nontrivial.empty(); }
};

namespace detail {

struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("int64 overflow in elimination") {}
};

inline std::int64_t mul_sub(std::int64_t a, std::int64_t f, std::int64_t b) {
    std::int64_t p = 0;
    std::int64_t r = 0;
    if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw OverflowError();
    return r;
}
inline Integer mul_sub(const Integer& a, const Integer& f, const Integer& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

inline std::int64_t neg(std::int64_t v) {
    if (v == INT64_MIN) throw OverflowError();
    return -v;
}
inline Integer neg(const Integer& v) { return -v; }

inline Integer widen(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer widen(const Integer& v) { return v; }

template <class T>
struct Entry {
    int col;
    T val;
};

/// Dense Smith normal form of a matrix without any structure assumptions.
/// Returns the nonzero diagonal in divisibility order.
inline std::vector<Integer> dense_smith_diagonal(std::vector<std::vector<Integer>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    std::vector<Integer> diag;
    std::size_t t = 0;
    while (t < m && t < n) {
        // Smallest nonzero magnitude in the trailing block.
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                // Bring the smallest remainder of row t / column t to the pivot.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) { bi = i; bj = t; }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) { bi = t; bj = j; }
                std::swap(a[t], a[bi]);
                for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][bj]);
                continue;
            }
            // Pivot must divide the trailing block; otherwise fold a row in.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) { bad = i; break; }
            if (bad == m) break;
            for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

template <class T>
T from_integer(const Integer& v);
template <>
inline std::int64_t from_integer<std::int64_t>(const Integer& v) {
    if (!fits_int64(v)) throw OverflowError();
    return static_cast<std::int64_t>(v.get_si());
}
template <>
inline Integer from_integer<Integer>(const Integer& v) { return v; }

template <class T>
SmithForm sparse_smith(const SparseMatrix& m) {
    const int nr = m.rows();
    const int nc = m.cols();
    std::vector<std::vector<Entry<T>>> rows(static_cast<std::size_t>(nr));
    std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(nc));
    for (const auto& e : m.entries()) {
        rows[static_cast<std::size_t>(e.row)].push_back({e.col, from_integer<T>(e.value)});
        col_rows[static_cast<std::size_t>(e.col)].push_back(e.row);
    }
    for (auto& r : rows)
        std::sort(r.begin(), r.end(), [](const Entry<T>& a, const Entry<T>& b) { return a.col < b.col; });

    std::vector<char> row_alive(static_cast<std::size_t>(nr), 1), col_alive(static_cast<std::size_t>(nc), 1);
    auto find_in_row = [&](int r, int c) -> const Entry<T>* {
        const auto& row = rows[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry<T>& e, int col) { return e.col < col; });
        return (it != row.end() && it->col == c) ? &*it : nullptr;
    };

    std::vector<int> order(static_cast<std::size_t>(nc));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return col_rows[static_cast<std::size_t>(a)].size() < col_rows[static_cast<std::size_t>(b)].size();
    });

    SmithForm result;
    result.rows = nr;
    result.cols = nc;
    std::vector<Entry<T>> merged;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int c : order) {
            if (!col_alive[static_cast<std::size_t>(c)]) continue;
            auto& candidates = col_rows[static_cast<std::size_t>(c)];
            // Drop stale references.
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                            [&](int r) { return !row_alive[static_cast<std::size_t>(r)] || !find_in_row(r, c); }),
                             candidates.end());
            if (candidates.empty()) {
                col_alive[static_cast<std::size_t>(c)] = 0;
                continue;
            }
            int pivot = -1;
            for (int r : candidates)
                if (is_unit(find_in_row(r, c)->val) &&
                    (pivot < 0 || rows[static_cast<std::size_t>(r)].size() < rows[static_cast<std::size_t>(pivot)].size()))
                    pivot = r;
            if (pivot < 0) continue;
            progress = true;
            const T unit = find_in_row(pivot, c)->val;
            const auto& prow = rows[static_cast<std::size_t>(pivot)];
            for (int r : candidates) {
                if (r == pivot) continue;
                auto& row = rows[static_cast<std::size_t>(r)];
                // factor = a_rc / unit = a_rc * unit
                T factor = find_in_row(r, c)->val;
                if (unit != T(1)) factor = neg(factor);
                merged.clear();
                std::size_t i = 0, j = 0;
                while (i < row.size() || j < prow.size()) {
                    if (j == prow.size() || (i < row.size() && row[i].col < prow[j].col)) {
                        merged.push_back(row[i++]);
                    } else if (i == row.size() || prow[j].col < row[i].col) {
                        T v = mul_sub(T(0), factor, prow[j].val);
                        col_rows[static_cast<std::size_t>(prow[j].col)].push_back(r);
                        merged.push_back({prow[j].col, v});
                        ++j;
                    } else {
                        T v = mul_sub(row[i].val, factor, prow[j].val);
                        if (v != T(0)) merged.push_back({row[i].col, v});
                        ++i;
                        ++j;
                    }
                }
                row.swap(merged);
            }
            row_alive[static_cast<std::size_t>(pivot)] = 0;
            col_alive[static_cast<std::size_t>(c)] = 0;
            rows[static_cast<std::size_t>(pivot)].clear();
            candidates.clear();
            ++result.rank;
            ++result.unit_count;
        }
    }

    // Dense remainder.
    std::vector<int> rem_rows, rem_cols;
    std::vector<int> col_index(static_cast<std::size_t>(nc), -1);
    for (int r = 0; r < nr; ++r) {
        if (!row_alive[static_cast<std::size_t>(r)] || rows[static_cast<std::size_t>(r)].empty()) continue;
        rem_rows.push_back(r);
        for (const auto& e : rows[static_cast<std::size_t>(r)])
            if (col_index[static_cast<std::size_t>(e.col)] < 0) {
                col_index[static_cast<std::size_t>(e.col)] = static_cast<int>(rem_cols.size());
                rem_cols.push_back(e.col);
            }
    }
    if (!rem_rows.empty()) {
        std::vector<std::vector<Integer>> dense(rem_rows.size(), std::vector<Integer>(rem_cols.size(), 0));
        for (std::size_t i = 0; i < rem_rows.size(); ++i)
            for (const auto& e : rows[static_cast<std::size_t>(rem_rows[i])])
                dense[i][static_cast<std::size_t>(col_index[static_cast<std::size_t>(e.col)])] = widen(e.val);
        auto diag = dense_smith_diagonal(std::move(dense));
        for (auto& d : diag) {
            ++result.rank;
            if (d == 1)
                ++result.unit_count;
            else
                result.nontrivial.push_back(d);
        }
        std::sort(result.nontrivial.begin(), result.nontrivial.end());
    }
    return result;
}

}  // namespace detail

/// Smith normal form invariants (rank, invariant factors) of an integer matrix.
inline SmithForm smith_form(const SparseMatrix& m) {
    try {
        return detail::sparse_smith<std::int64_t>(m);
    } catch (const detail::OverflowError&) {
        return detail::sparse_smith<Integer>(m);
    }
}

/// Same computation forced onto arbitrary-precision arithmetic throughout.
inline SmithForm smith_form_bigint(const SparseMatrix& m) { return detail::sparse_smith<Integer>(m); }

}  // namespace injword
