#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "walkgf/errors.hpp"

namespace walkgf {

// Exact arbitrary-precision arithmetic. GMP's canonical form gives exactly the
// invariants we rely on: lowest terms, positive denominator, zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer numerator(const Rational& q) { return Integer(q.get_num()); }
inline Integer denominator(const Rational& q) { return Integer(q.get_den()); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Renders "a" for integers and "a/b" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Parses "a" or "a/b" with optional sign; rejects anything else.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw UsageError("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw UsageError("invalid rational literal: '" + std::string(text) + "'");
    if (sgn(Integer(q.get_den())) <= 0)
        throw UsageError("invalid rational literal (nonpositive denominator): '" +
                         std::string(text) + "'");
    q.canonicalize();
    return q;
}

} // namespace walkgf
