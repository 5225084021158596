#pragma once

#include <gmpxx.h>

#include <string>

#include "logder/errors.hpp"

namespace logder {

// Exact rational scalar. GMP keeps the invariant gcd(num, den) = 1, den > 0
// for every value produced by arithmetic; values built from raw parts go
// through make_rational below, which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw error("rational: zero denominator");
    Rational r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    r.canonicalize();
    return r;
}

/// Parses `p` or `p/q` with optional leading sign. Rejects anything else,
/// including a zero denominator.
inline Rational parse_rational(const std::string& text, int line_no = 0) {
    try {
        Rational r(text, 10);
        if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
            throw parse_error("bad rational '" + text + "': zero denominator", line_no);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational '" + text + "'", line_no);
    }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Binomial coefficient C(n, k); 0 for negative n or k, exact for the rest.
inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

} // namespace logder
