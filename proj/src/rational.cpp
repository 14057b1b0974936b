#include "lelek/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace lelek {

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!valid_integer_text(num) || !valid_integer_text(den))
            throw ParseError("not a rational: '" + text + "'");
        const Integer numerator(num);
        const Integer denominator(den);
        if (denominator == 0) throw ParseError("zero denominator: '" + text + "'");
        Rational v(numerator, denominator);
        v.canonicalize();
        return v;
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || !valid_integer_text(frac) ||
            (!whole.empty() && whole != "-" && whole != "+" && !valid_integer_text(whole)))
            throw ParseError("not a rational: '" + text + "'");
        const bool neg = !whole.empty() && whole[0] == '-';
        Integer w(whole.empty() || whole == "-" || whole == "+" ? "0" : whole);
        Integer f(frac);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer abs_w = abs(w);
        Rational v(abs_w * scale + f, scale);
        v.canonicalize();
        return neg ? Rational(-v) : v;
    }
    if (!valid_integer_text(text)) throw ParseError("not a rational: '" + text + "'");
    return Rational(Integer(text));
}

std::string rational_str(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw NonPositiveInput("zero base with negative exponent");
        return Rational(0);
    }
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
    Rational out = (e > 0) ? Rational(num, den) : Rational(den, num);
    out.canonicalize();
    return out;
}

Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    Rational out = (e >= 0) ? Rational(p) : Rational(1, p);
    out.canonicalize();
    return out;
}

unsigned long ceil_log2_inverse(const Rational& eps, unsigned long cap) {
    if (sgn(eps) <= 0) throw InvalidEps("eps must be positive");
    Rational scaled = eps;
    unsigned long d = 0;
    while (scaled < 1) {
        if (d >= cap) throw EpsilonTooSmall("eps below 2^-" + std::to_string(cap));
        scaled *= 2;
        ++d;
    }
    return d;
}

LogScalar LogScalar::of_rational(const Rational& positive) {
    if (sgn(positive) <= 0) throw NonPositiveInput("log of a non-positive rational");
    mpfr_t lo, hi;
    mpfr_init2(lo, 128);
    mpfr_init2(hi, 128);
    mpfr_set_q(lo, positive.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo, lo, MPFR_RNDD);
    mpfr_set_q(hi, positive.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi, hi, MPFR_RNDU);
    const double dlo = mpfr_get_d(lo, MPFR_RNDD);
    const double dhi = mpfr_get_d(hi, MPFR_RNDU);
    mpfr_clear(lo);
    mpfr_clear(hi);

    LogScalar out;
    out.log_value = 0.5 * (dlo + dhi);
    const double half = std::max(out.log_value - dlo, dhi - out.log_value);
    out.err = half + std::ldexp(std::abs(out.log_value), -50) + 1e-300;
    return out;
}

LogScalar LogScalar::scaled(unsigned long k) const {
    LogScalar out;
    const double kd = static_cast<double>(k);
    out.log_value = log_value * kd;
    out.err = err * kd + std::ldexp(std::abs(out.log_value), -48) + 1e-300;
    return out;
}

LogScalar LogScalar::plus(const LogScalar& other) const {
    LogScalar out;
    out.log_value = log_value + other.log_value;
    out.err = err + other.err + std::ldexp(std::abs(out.log_value), -48) + 1e-300;
    return out;
}

}  // namespace lelek
