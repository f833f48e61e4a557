#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace injword {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Falling factorial n (n-1) ... (n-m+1); zero when m > n.
inline Integer falling_factorial(long n, long m) {
    if (m < 0 || n < 0 || m > n) return m == 0 ? Integer(1) : Integer(0);
    Integer r = 1;
    for (long i = 0; i < m; ++i) r *= (n - i);
    return r;
}

// (2b-1)!! = number of perfect matchings of a 2b-element set.
inline Integer double_factorial_odd(long b) {
    Integer r = 1;
    for (long i = 1; i <= b; ++i) r *= (2 * i - 1);
    return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

inline bool fits_int64(const Integer& x) {
    return mpz_fits_slong_p(x.get_mpz_t()) != 0;
}

inline std::int64_t to_int64(const Integer& x) {
    if (!fits_int64(x)) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
    return static_cast<std::int64_t>(x.get_si());
}

inline int sign_of(const Integer& x) { return sgn(x); }

inline bool is_integral(const Rational& x) {
    return mpz_cmp_ui(x.get_den_mpz_t(), 1) == 0;
}

// Parity of a permutation given as a sequence of distinct comparable values:
// +1 if the number of inversions is even, -1 otherwise.
template <class Seq>
int permutation_sign(const Seq& seq) {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[j] < seq[i]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace injword
