#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "cohom1/errors.hpp"

namespace cohom1 {

using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", or "p/q" into a canonical rational.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InvalidInput("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// log10 |q|, correct even when the double conversion would under- or
// overflow.  Returns -inf for q == 0.
inline double log10_abs(const Rational& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    signed long en, ed;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    constexpr double log10_2 = 0.30102999566398119521;
    return std::log10(std::fabs(mn / md)) + static_cast<double>(en - ed) * log10_2;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Nearest rational with the given denominator; used to place exact
// evaluation points on a log grid.
inline Rational rational_near(double x, long denom = 100000000L) {
    long num = std::lround(x * static_cast<double>(denom));
    Rational q(num, denom);
    q.canonicalize();
    return q;
}

}  // namespace cohom1
