#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>

namespace wpoly {

// Exact arithmetic throughout: coefficients are arbitrary-precision rationals,
// counting values arbitrary-precision integers.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// gmpxx has no long long constructors; degrees fit in long on this target.
inline BigInt bigint(long long v) { return BigInt(static_cast<long>(v)); }
inline Rational rational_of(long long v) { return Rational(static_cast<long>(v)); }

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline long long to_long(const BigInt& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("BigInt does not fit in long");
    return z.get_si();
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace wpoly
