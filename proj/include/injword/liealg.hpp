#pragma once

// The multilinear part of the free graded Lie superalgebra inside the free
// associative algebra on injective words: brackets, the Reutenauer basis of
// each Lie module, and the PBW and Lie-product bases of the top chain group.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "injword/combinatorics.hpp"
#include "injword/integer.hpp"
#include "injword/sparse_matrix.hpp"

namespace injword {

/// Homogeneous integer combination of injective words of a common length.
class WordPolynomial {
public:
    explicit WordPolynomial(int degree = 0) : degree_(degree) {}

    static WordPolynomial word(const Word& w, const Integer& c = 1) {
        WordPolynomial p(static_cast<int>(w.size()));
        p.add_term(w, c);
        return p;
    }
    static WordPolynomial letter(Label a) { return word({a}); }
    static WordPolynomial one() { return word({}); }

    int degree() const { return degree_; }
    const std::map<Word, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Integer coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Word& w, const Integer& c) {
        if (static_cast<int>(w.size()) != degree_)
            throw std::invalid_argument("word length " + std::to_string(w.size()) + " in degree " + std::to_string(degree_));
        if (std::set<Label>(w.begin(), w.end()).size() != w.size())
            throw std::invalid_argument("word is not injective");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Letters appearing in some word, sorted.
    std::vector<Label> support() const {
        std::set<Label> s;
        for (const auto& [w, c] : terms_) s.insert(w.begin(), w.end());
        return {s.begin(), s.end()};
    }

    /// The lexicographically smallest word with nonzero coefficient.
    const Word& leading_word() const {
        if (terms_.empty()) throw std::logic_error("leading_word of zero polynomial");
        return terms_.begin()->first;
    }

    WordPolynomial& operator+=(const WordPolynomial& o) {
        check_degree(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    WordPolynomial& operator-=(const WordPolynomial& o) {
        check_degree(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    WordPolynomial& operator*=(const Integer& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [w, c] : terms_) c *= s;
        }
        return *this;
    }
    friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial& b) { return a += b; }
    friend WordPolynomial operator-(WordPolynomial a, const WordPolynomial& b) { return a -= b; }
    friend WordPolynomial operator*(const Integer& s, WordPolynomial a) { return a *= s; }
    friend WordPolynomial operator-(WordPolynomial a) { return a *= Integer(-1); }
    bool operator==(const WordPolynomial& o) const {
        return (terms_.empty() && o.terms_.empty()) || (degree_ == o.degree_ && terms_ == o.terms_);
    }

    /// Human-readable form, e.g. "123 + 132 - 231"; words with labels >= 10 are dotted.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            const bool neg = c < 0;
            Integer mag = neg ? Integer(-c) : c;
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (mag != 1 || w.empty()) s += mag.get_str();
            s += word_string(w);
            first = false;
        }
        return s;
    }

    static std::string word_string(const Word& w) {
        const bool wide = std::any_of(w.begin(), w.end(), [](Label a) { return a < 0 || a > 9; });
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (wide && i > 0) s += '.';
            s += std::to_string(w[i]);
        }
        return s;
    }

private:
    void check_degree(const WordPolynomial& o) const {
        if (!is_zero() && !o.is_zero() && o.degree_ != degree_)
            throw std::invalid_argument("adding word polynomials of different degrees");
    }

    int degree_;
    std::map<Word, Integer> terms_;
};

namespace detail {
inline void require_disjoint(const WordPolynomial& a, const WordPolynomial& b, const char* what) {
    auto sa = a.support();
    auto sb = b.support();
    std::vector<Label> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    if (!common.empty()) throw std::invalid_argument(std::string(what) + ": supports overlap at letter " + std::to_string(common.front()));
}
}  // namespace detail

/// The concatenation product ab.
inline WordPolynomial concatenate(const WordPolynomial& a, const WordPolynomial& b) {
    detail::require_disjoint(a, b, "product");
    WordPolynomial out(a.degree() + b.degree());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, cu * cv);
        }
    return out;
}

/// Multilinear product of factors with pairwise disjoint supports.
inline WordPolynomial expand_product(const std::vector<WordPolynomial>& factors) {
    WordPolynomial acc = WordPolynomial::one();
    for (const auto& f : factors) acc = concatenate(acc, f);
    return acc;
}

/// Graded commutator [a,b] = ab - (-1)^{|a||b|} ba.
inline WordPolynomial bracket(const WordPolynomial& a, const WordPolynomial& b) {
    detail::require_disjoint(a, b, "bracket");
    WordPolynomial ab = concatenate(a, b);
    WordPolynomial ba = concatenate(b, a);
    if ((a.degree() * b.degree()) % 2 == 0) return ab - ba;
    return ab + ba;
}

/// A leaf label or a bracket of two subtrees.
struct BracketTree {
    Label leaf = 0;
    std::vector<BracketTree> children;  // empty for a leaf, else exactly two

    static BracketTree of(Label a) { return BracketTree{a, {}}; }
    static BracketTree join(BracketTree l, BracketTree r) {
        BracketTree t;
        t.children.push_back(std::move(l));
        t.children.push_back(std::move(r));
        return t;
    }
    bool is_leaf() const { return children.empty(); }
    const BracketTree& left() const { return children.at(0); }
    const BracketTree& right() const { return children.at(1); }

    std::vector<Label> leaves() const {
        if (is_leaf()) return {leaf};
        auto l = left().leaves();
        auto r = right().leaves();
        l.insert(l.end(), r.begin(), r.end());
        return l;
    }
    std::vector<Label> support() const {
        auto s = leaves();
        std::sort(s.begin(), s.end());
        return s;
    }
    WordPolynomial expand() const {
        if (is_leaf()) return WordPolynomial::letter(leaf);
        return bracket(left().expand(), right().expand());
    }
    std::string to_string() const {
        if (is_leaf()) return std::to_string(leaf);
        return "[" + left().to_string() + "," + right().to_string() + "]";
    }
    bool operator==(const BracketTree&) const = default;
};

/// Left-nested bracket [[...[a1,a2],a3],...,an].
inline BracketTree left_nested(const Word& letters) {
    if (letters.empty()) throw std::invalid_argument("left_nested: empty word");
    BracketTree t = BracketTree::of(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i) t = BracketTree::join(std::move(t), BracketTree::of(letters[i]));
    return t;
}

struct LieElement {
    BracketTree tree;
    WordPolynomial expansion;
};

/// [[...[m,a2],...],ak] over all orderings a2..ak of S minus its minimum m,
/// the orderings taken lexicographically.
inline std::vector<LieElement> reutenauer_basis(const GroundSet& s) {
    std::vector<LieElement> out;
    if (s.size() < 2) return out;
    std::vector<Label> rest = s.elements();
    std::sort(rest.begin(), rest.end());
    const Label m = rest.front();
    rest.erase(rest.begin());
    do {
        Word w{m};
        w.insert(w.end(), rest.begin(), rest.end());
        BracketTree t = left_nested(w);
        out.push_back({t, t.expand()});
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

/// An element of B: a letter, or a Reutenauer basis element of some L_S.
struct BasisFactor {
    BracketTree tree;
    std::vector<Label> support;
    Word leading;
    WordPolynomial expansion;

    static BasisFactor from(BracketTree t) {
        BasisFactor f;
        f.expansion = t.expand();
        f.support = t.support();
        f.leading = f.expansion.leading_word();
        f.tree = std::move(t);
        return f;
    }
    bool singleton() const { return support.size() == 1; }
};

using FactorOrder = std::function<bool(const BasisFactor&, const BasisFactor&)>;

/// Graded-lexicographic order: support size, then sorted support, then leading word.
inline bool graded_lex_less(const BasisFactor& a, const BasisFactor& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    if (a.support != b.support) return a.support < b.support;
    return a.leading < b.leading;
}

/// A product P1 ... Pm of elements of B with disjoint supports covering [k].
struct LProduct {
    std::vector<BasisFactor> factors;

    int singleton_count() const {
        return static_cast<int>(std::count_if(factors.begin(), factors.end(), [](const BasisFactor& f) { return f.singleton(); }));
    }
    WordPolynomial expand() const {
        std::vector<WordPolynomial> parts;
        for (const auto& f : factors) parts.push_back(f.expansion);
        return expand_product(parts);
    }
    /// Compact rendering, e.g. "12[3,4]" or "[1,2][3,4]".
    std::string to_string() const {
        std::string s;
        for (const auto& f : factors) s += f.tree.to_string();
        return s;
    }
};

/// PBW basis of the degree-k chain group: one product per set partition of [k]
/// and choice of basis element on every block, factors ascending in `order`.
/// Listed by number of singleton factors, then number of factors, then
/// lexicographically in the factor order.
inline std::vector<LProduct> pbw_basis(int k, const FactorOrder& order = graded_lex_less) {
    std::vector<LProduct> out;
    if (k < 0) return out;
    std::map<std::vector<Label>, std::vector<BasisFactor>> per_block;
    for_each_set_partition(GroundSet::standard(k), [&](const SetPartition& blocks) {
        std::vector<const std::vector<BasisFactor>*> choices;
        for (const auto& b : blocks) {
            auto it = per_block.find(b);
            if (it == per_block.end()) {
                std::vector<BasisFactor> fs;
                if (b.size() == 1) {
                    fs.push_back(BasisFactor::from(BracketTree::of(b.front())));
                } else {
                    for (auto& e : reutenauer_basis(GroundSet(b))) fs.push_back(BasisFactor::from(e.tree));
                }
                it = per_block.emplace(b, std::move(fs)).first;
            }
            choices.push_back(&it->second);
        }
        std::vector<std::size_t> pick(choices.size(), 0);
        for (;;) {
            LProduct p;
            for (std::size_t i = 0; i < choices.size(); ++i) p.factors.push_back((*choices[i])[pick[i]]);
            std::sort(p.factors.begin(), p.factors.end(), order);
            out.push_back(std::move(p));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices[i]->size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    });
    std::stable_sort(out.begin(), out.end(), [&](const LProduct& a, const LProduct& b) {
        if (a.singleton_count() != b.singleton_count()) return a.singleton_count() < b.singleton_count();
        if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
        return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(), order);
    });
    return out;
}

/// The PBW elements without singleton factors; these span the top homology.
inline std::vector<LProduct> lproduct_basis(int k, const FactorOrder& order = graded_lex_less) {
    auto all = pbw_basis(k, order);
    std::vector<LProduct> out;
    for (auto& p : all)
        if (p.singleton_count() == 0) out.push_back(std::move(p));
    return out;
}

/// Rows indexed by `words`, one column per polynomial.
inline SparseMatrix expansion_matrix(const std::vector<WordPolynomial>& polys, const std::vector<Word>& words) {
    std::map<Word, int> row;
    for (std::size_t i = 0; i < words.size(); ++i) row.emplace(words[i], static_cast<int>(i));
    SparseMatrix m(static_cast<int>(words.size()), static_cast<int>(polys.size()));
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (const auto& [w, c] : polys[j].terms()) {
            auto it = row.find(w);
            if (it == row.end()) throw std::invalid_argument("expansion_matrix: word " + WordPolynomial::word_string(w) + " not indexed");
            m.add(it->second, static_cast<int>(j), c);
        }
    m.canonicalize();
    return m;
}

struct NotInSpan : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonIntegralCoordinates : std::domain_error {
    std::vector<Rational> coordinates;
    NonIntegralCoordinates(const std::string& what, std::vector<Rational> coords)
        : std::domain_error(what), coordinates(std::move(coords)) {}
};

/// Coordinates of x in the span of linearly independent polynomials, by exact
/// rational elimination. Throws NotInSpan or NonIntegralCoordinates.
inline std::vector<Integer> solve_in_span(const std::vector<WordPolynomial>& basis, const WordPolynomial& x) {
    std::map<Word, std::size_t> row_of;
    auto index = [&](const WordPolynomial& p) {
        for (const auto& [w, c] : p.terms()) row_of.emplace(w, row_of.size());
    };
    for (const auto& b : basis) index(b);
    index(x);
    const std::size_t n = basis.size();
    const std::size_t m = row_of.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [w, c] : basis[j].terms()) a[row_of[w]][j] = Rational(c);
    for (const auto& [w, c] : x.terms()) a[row_of[w]][n] = Rational(c);

    std::vector<std::size_t> pivot_row(n, m);
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = r;
        while (p < m && a[p][j] == 0) ++p;
        if (p == m) throw std::invalid_argument("solve_in_span: basis is linearly dependent");
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][j] == 0) continue;
            Rational f = a[i][j] / a[r][j];
            for (std::size_t t = j; t <= n; ++t) a[i][t] -= f * a[r][t];
        }
        pivot_row[j] = r++;
    }
    for (std::size_t i = r; i < m; ++i)
        if (a[i][n] != 0) throw NotInSpan("polynomial is not in the span of the basis");
    std::vector<Rational> coords(n);
    bool integral = true;
    for (std::size_t j = 0; j < n; ++j) {
        coords[j] = a[pivot_row[j]][n] / a[pivot_row[j]][j];
        coords[j].canonicalize();
        integral = integral && is_integral(coords[j]);
    }
    if (!integral) throw NonIntegralCoordinates("coordinates are not integral", coords);
    std::vector<Integer> out;
    for (const auto& c : coords) out.push_back(c.get_num());
    return out;
}

/// Coordinates of a Lie polynomial in the Reutenauer basis of its support.
inline std::vector<Integer> straighten_lie(const WordPolynomial& x, const GroundSet& s) {
    std::vector<WordPolynomial> basis;
    for (const auto& e : reutenauer_basis(s)) basis.push_back(e.expansion);
    return solve_in_span(basis, x);
}

inline std::vector<Integer> straighten_lie(const WordPolynomial& x) { return straighten_lie(x, GroundSet(x.support())); }

}  // namespace injword
