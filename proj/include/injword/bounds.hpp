#pragma once

// Generation and relation degree bookkeeping for FI-modules through
// subquotients and spectral sequence pages, and the stable range for
// configuration spaces of closed manifolds.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "injword/integer.hpp"

namespace injword {

/// A degree bound: a nonnegative integer or +infinity.
class Degree {
public:
    Degree(long v = 0) : value_(v) {  // NOLINT(google-explicit-constructor)
        if (v < 0) throw std::invalid_argument("degree bounds are nonnegative");
    }
    static Degree infinity() {
        Degree d;
        d.infinite_ = true;
        return d;
    }
    bool is_infinite() const { return infinite_; }
    long value() const {
        if (infinite_) throw std::logic_error("infinite degree has no value");
        return value_;
    }
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend Degree operator+(const Degree& a, const Degree& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Degree(a.value_ + b.value_);
    }
    friend bool operator==(const Degree& a, const Degree& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }

private:
    long value_ = 0;
    bool infinite_ = false;
};

inline Degree dmax(std::initializer_list<Degree> xs) {
    Degree m = *xs.begin();
    for (const auto& x : xs)
        if (m < x) m = x;
    return m;
}

struct DegreePair {
    Degree gen;
    Degree rel;
};

/// ker(rho)/im(phi) for U -phi-> V -rho-> W.
inline DegreePair homfi_bounds(Degree dU, Degree rU, Degree dV, Degree rV, Degree dW, Degree rW) {
    (void)rU;  // the relation degree of U does not enter
    DegreePair out;
    out.gen = dmax({rV, Degree(1) + dW + dmax({rW, dV})});
    out.rel = dmax({dU, rV, Degree(2) + dW + dV + dmax({rW, dV})});
    return out;
}

enum class Grading { homological, cohomological };

/// Bounds for E_{r+1} at a cell from the three cells on its differential line:
/// `incoming` maps into the cell, `outgoing` receives its differential. For
/// homological grading these are E_{p+r,q-r+1} and E_{p-r,q+r-1}; for
/// cohomological grading E^{p-r,q+r-1} and E^{p+r,q-r+1}.
inline DegreePair ss_bounds(Grading, const DegreePair& incoming, const DegreePair& cell, const DegreePair& outgoing) {
    return homfi_bounds(incoming.gen, incoming.rel, cell.gen, cell.rel, outgoing.gen, outgoing.rel);
}

/// E_1 bounds of the puncture resolution spectral sequence at (p,q), total
/// degree s = p+q: generation 2s (or the sharper 2p), relations 0.
inline DegreePair e1_bounds(int p, int q, bool sharper = false) {
    return DegreePair{Degree(2L * (sharper ? p : p + q)), Degree(0)};
}

/// E_2 bounds at (p,q) from one differential step on E_1.
inline DegreePair e2_bounds(int p, int q, bool sharper = false) {
    auto at = [&](int pp, int qq) { return (pp < 0 || qq < 0) ? DegreePair{Degree(0), Degree(0)} : e1_bounds(pp, qq, sharper); };
    return ss_bounds(Grading::cohomological, at(p - 1, q), at(p, q), at(p + 1, q));
}

/// Affine bounds gen <= a s + b, rel <= c s + d in the total degree s.
struct BoundVector {
    Integer a, b, c, d;
    bool operator==(const BoundVector&) const = default;
    bool dominated_by(const BoundVector& o) const { return a <= o.a && b <= o.b && c <= o.c && d <= o.d; }
};

/// (a,b,c,d) -> (a+c, a+b+c+d+1, 2a+c, a+2b+c+d+2), repeated.
inline BoundVector iterate_bound_matrix(BoundVector v, int steps) {
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    for (int i = 0; i < steps; ++i)
        v = BoundVector{v.a + v.c, v.a + v.b + v.c + v.d + 1, 2 * v.a + v.c, v.a + 2 * v.b + v.c + v.d + 2};
    return v;
}

inline const BoundVector& e2_start() {
    static const BoundVector v{4, 3, 6, 4};
    return v;
}

/// Exact numbers a + b sqrt(2) with integer a, b.
class RootTwo {
public:
    RootTwo(Integer a = 0, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
    static RootTwo silver(int e) {  // (1 + sqrt 2)^e, any integer e
        RootTwo base = e >= 0 ? RootTwo(1, 1) : RootTwo(-1, 1);
        RootTwo r(1, 0);
        for (int i = 0; i < std::abs(e); ++i) r = r * base;
        return r;
    }
    const Integer& rational_part() const { return a_; }
    const Integer& root_part() const { return b_; }

    friend RootTwo operator+(const RootTwo& x, const RootTwo& y) { return RootTwo(x.a_ + y.a_, x.b_ + y.b_); }
    friend RootTwo operator-(const RootTwo& x, const RootTwo& y) { return RootTwo(x.a_ - y.a_, x.b_ - y.b_); }
    friend RootTwo operator*(const RootTwo& x, const RootTwo& y) {
        return RootTwo(x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend bool operator==(const RootTwo& x, const RootTwo& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    /// Sign of a + b sqrt 2, decided by comparing a^2 with 2 b^2.
    int sign() const {
        const int sa = sgn(a_), sb = sgn(b_);
        if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
        if (sa <= 0 && sb <= 0) return -1;
        const int cmp_ = cmp(Integer(a_ * a_), Integer(2 * b_ * b_));
        // a and b have opposite signs: the larger square wins.
        return cmp_ > 0 ? sa : (cmp_ < 0 ? sb : 0);
    }
    friend bool operator<=(const RootTwo& x, const RootTwo& y) { return (y - x).sign() >= 0; }
    friend bool operator<(const RootTwo& x, const RootTwo& y) { return (y - x).sign() > 0; }

    std::string to_string() const {
        if (b_ == 0) return a_.get_str();
        std::string s = a_ == 0 ? "" : a_.get_str();
        if (a_ != 0) s += b_ < 0 ? " - " : " + ";
        else if (b_ < 0) s += "-";
        Integer mag = abs(b_);
        return s + (mag == 1 ? "" : mag.get_str() + "*") + "sqrt(2)";
    }
    /// Decimal rendering to `digits` significant digits, for display only.
    std::string to_decimal(int digits = 12) const {
        mpf_class root(2, 512), v(0, 512);
        root = sqrt(root);
        v = mpf_class(a_, 512) + mpf_class(b_, 512) * root;
        mp_exp_t exp = 0;
        std::string m = v.get_str(exp, 10, static_cast<std::size_t>(digits));
        if (m.empty()) return "0";
        bool neg = m[0] == '-';
        if (neg) m.erase(0, 1);
        std::string out;
        if (exp <= 0) {
            out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + m;
        } else if (static_cast<std::size_t>(exp) >= m.size()) {
            out = m + std::string(static_cast<std::size_t>(exp) - m.size(), '0');
        } else {
            out = m.substr(0, static_cast<std::size_t>(exp)) + "." + m.substr(static_cast<std::size_t>(exp));
        }
        return (neg ? "-" : "") + out;
    }

private:
    Integer a_, b_;
};

/// The bound vector (12u, (12+9(r-1))u, 15u, (15+13(r-1))u), u = (1+sqrt2)^{r-2}.
inline std::array<RootTwo, 4> silver_bound_vector(int r) {
    const RootTwo u = RootTwo::silver(r - 2);
    return {RootTwo(12) * u, RootTwo(12 + 9 * (r - 1)) * u, RootTwo(15) * u, RootTwo(15 + 13 * (r - 1)) * u};
}

inline bool dominated_by(const BoundVector& v, const std::array<RootTwo, 4>& w) {
    return RootTwo(v.a) <= w[0] && RootTwo(v.b) <= w[1] && RootTwo(v.c) <= w[2] && RootTwo(v.d) <= w[3];
}

/// Bounds on page E_r (r >= 1) at total degree s. E_1 is (2s, 0); page E_r
/// for r >= 2 is the matrix applied r-2 times to (4,3,6,4).
inline DegreePair page_bounds(int s, int r) {
    if (r < 1 || s < 0) throw std::invalid_argument("page_bounds needs r >= 1, s >= 0");
    if (r == 1) return DegreePair{Degree(2L * s), Degree(0)};
    const auto v = iterate_bound_matrix(e2_start(), r - 2);
    return DegreePair{Degree(Integer(v.a * s + v.b).get_si()), Degree(Integer(v.c * s + v.d).get_si())};
}

struct ClosedManifoldBounds {
    RootTwo gen;  // 21 (p+1) (1+sqrt2)^{p-2}
    RootTwo rel;  // 28 (p+1) (1+sqrt2)^{p-2}
    DegreePair page;  // iterated bound on E_{p+1}, the page where the sequence has converged
    bool page_within_closed_form = false;
};

inline ClosedManifoldBounds closed_manifold_bounds(int p) {
    if (p < 0) throw std::invalid_argument("p must be nonnegative");
    ClosedManifoldBounds out;
    const RootTwo u = RootTwo::silver(p - 2);
    out.gen = RootTwo(21L * (p + 1)) * u;
    out.rel = RootTwo(28L * (p + 1)) * u;
    out.page = page_bounds(p, p + 1);
    out.page_within_closed_form =
        RootTwo(out.page.gen.value()) <= out.gen && RootTwo(out.page.rel.value()) <= out.rel;
    if (!out.page_within_closed_form)
        throw std::logic_error("iterated page bound exceeds the closed form at p = " + std::to_string(p));
    return out;
}

}  // namespace injword
