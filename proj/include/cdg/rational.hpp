#ifndef CDG_RATIONAL_HPP
#define CDG_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "cdg/errors.hpp"

namespace cdg {

/* Exact coefficient arithmetic. mpq_class keeps values canonical (reduced,
 * positive denominator) under its own operators; the helpers below are the
 * only places that build rationals from raw parts, and they canonicalize. */
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw BadInput("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/* mpq_get_d only carries 53 mantissa bits; the asymptotics layer wants the
 * full x87 long double mantissa. Take an ~80-bit integer quotient and fold
 * it in two exact 40-bit halves. */
inline long double to_long_double(const Rational& q) {
    if (sgn(q) == 0) return 0.0L;
    mpz_class num = q.get_num();
    const mpz_class& den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    long bn = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long bd = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    long shift = 80 - (bn - bd);
    mpz_class n2 = num, d2 = den;
    if (shift >= 0)
        n2 <<= static_cast<unsigned long>(shift);
    else
        d2 <<= static_cast<unsigned long>(-shift);
    mpz_class quot = n2 / d2;
    mpz_class hi = quot >> 40u;
    mpz_class lo = quot - (hi << 40u);
    long double r = std::ldexp(static_cast<long double>(hi.get_d()), 40) +
                    static_cast<long double>(lo.get_d());
    r = std::ldexp(r, static_cast<int>(-shift));
    return neg ? -r : r;
}

inline double to_double(const Rational& q) { return static_cast<double>(to_long_double(q)); }

}  // namespace cdg

#endif
