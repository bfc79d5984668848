#pragma once

#include <gmpxx.h>

#include <string>

#include "msp/errors.hpp"

namespace msp {

// Exact rational scalar. mpq_class keeps values canonical (gcd 1, positive
// denominator) as long as construction goes through these helpers.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p".
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

inline bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

inline long floor_long(const Rat& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!f.fits_slong_p()) throw ResourceError("rational floor out of long range");
    return f.get_si();
}

inline long ceil_long(const Rat& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!c.fits_slong_p()) throw ResourceError("rational ceil out of long range");
    return c.get_si();
}

} // namespace msp
