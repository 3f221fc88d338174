#pragma once

#include <gmpxx.h>

#include <string>

namespace ehrhart_lab {

// Exact arithmetic substrate. mpq_class values are kept canonical (reduced,
// positive denominator) by construction; no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer num(const Rational& q) { return q.get_num(); }
inline Integer den(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer ifloor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer iceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long to_long(const Integer& v);

// The value must be an integer that fits in a machine word.
long to_long(const Rational& q);

// Serialized form: "p" for integers, "p/q" otherwise (reduced).
std::string rational_string(const Rational& q);

// Accepts "p" or "p/q"; unreduced and negative-denominator input is
// canonicalized. Throws InvalidParameter on malformed text or q = 0.
Rational parse_rational(const std::string& text);

} // namespace ehrhart_lab
