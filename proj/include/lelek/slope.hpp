#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lelek/rational.hpp"

namespace lelek {

// One step of the relation: multiply by r (letter R) or by rho (letter P).
// The total order R < P is fixed; every deterministic enumeration uses it.
enum class Letter : unsigned char { R = 0, P = 1 };

char letter_char(Letter l);
std::optional<Letter> letter_from_char(char c);

// A validated slope pair: 0 < r < 1 < rho and r^k = rho^l only for
// k = l = 0.  Construct through validate_nc (or require_nc in tests);
// the constructor only checks positivity, which the cached logs need.
struct SlopePair {
    SlopePair(Rational r_in, Rational rho_in);

    Rational r;
    Rational rho;
    LogScalar log_r;
    LogScalar log_rho;

    const Rational& slope(Letter l) const { return l == Letter::R ? r : rho; }
    const LogScalar& log_slope(Letter l) const { return l == Letter::R ? log_r : log_rho; }
};

enum class NcClause { NonPositiveInput, OrderViolation, Dependent };

struct NcRejection {
    NcClause clause;
    // For Dependent: the minimal (k, l) != (0, 0) with r^k = rho^l, k > 0.
    std::optional<std::pair<long, long>> witness;
    std::string detail;
};

struct NcResult {
    std::optional<SlopePair> pair;
    std::optional<NcRejection> rejection;

    bool accepted() const { return pair.has_value(); }
};

// Decides the never-connect condition for rational slopes by comparing the
// prime-exponent vectors of r and rho; rejections carry the failed clause
// and, for dependence, an exact witness pair.
NcResult validate_nc(const Rational& r, const Rational& rho);

// validate_nc that throws on rejection; convenience for code that already
// knows its parameters are good.
SlopePair require_nc(const Rational& r, const Rational& rho);

// Prime -> signed exponent for a positive rational (denominator primes count
// negatively).  Trial division plus perfect-power/primality handling; throws
// FactorizationIncomplete on inputs beyond desk scale.
std::map<Integer, long> prime_exponents(const Rational& value);

// Lattice point r^m * rho^n carried as the exponent pair.
struct Monomial {
    unsigned long m = 0;
    unsigned long n = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Rational monomial_value(const SlopePair& sp, const Monomial& mono);

// Exact membership of (x, y) in the relation: y = r*x or y = rho*x.
// Both arguments must lie in [0, 1].
bool relation_contains(const SlopePair& sp, const Rational& x, const Rational& y);

}  // namespace lelek
