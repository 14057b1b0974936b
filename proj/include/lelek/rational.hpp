#pragma once

#include <gmpxx.h>

#include <string>

#include "lelek/errors.hpp"

namespace lelek {

// All values that carry meaning are exact rationals in canonical lowest
// terms; mpq_class keeps them canonical through arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
Rational parse_rational(const std::string& text);

// Lowest-terms "p/q"; integers render without the "/1".
std::string rational_str(const Rational& v);

// base^e with e possibly negative; base must be nonzero for e < 0.
Rational rational_pow(const Rational& base, long e);

// 2^e as an exact rational, e possibly negative.
Rational pow2(long e);

// Smallest d >= 0 with 2^-d <= eps, for eps > 0.  Throws EpsilonTooSmall
// past `cap`.
unsigned long ceil_log2_inverse(const Rational& eps, unsigned long cap = (1ul << 20));

// Floating enclosure of the natural log of a positive rational.  The true
// log always lies in [log_value - err, log_value + err]; used only to prune
// candidates, every accepted answer is re-verified exactly.
struct LogScalar {
    double log_value = 0.0;
    double err = 0.0;

    static LogScalar of_rational(const Rational& positive);

    LogScalar scaled(unsigned long k) const;
    LogScalar plus(const LogScalar& other) const;
};

}  // namespace lelek
