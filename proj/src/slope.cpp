#include "lelek/slope.hpp"

#include <numeric>

namespace lelek {

char letter_char(Letter l) { return l == Letter::R ? 'R' : 'P'; }

std::optional<Letter> letter_from_char(char c) {
    if (c == 'R' || c == 'r') return Letter::R;
    if (c == 'P' || c == 'p') return Letter::P;
    return std::nullopt;
}

SlopePair::SlopePair(Rational r_in, Rational rho_in) : r(std::move(r_in)), rho(std::move(rho_in)) {
    r.canonicalize();
    rho.canonicalize();
    if (sgn(r) <= 0 || sgn(rho) <= 0) throw NonPositiveInput("slopes must be positive rationals");
    log_r = LogScalar::of_rational(r);
    log_rho = LogScalar::of_rational(rho);
}

namespace {

// Factors n > 0 into primes.  Trial division to 2^20, then peels perfect
// powers and accepts a probable-prime cofactor.
void factor_into(Integer n, long sign, std::map<Integer, long>& out) {
    if (n == 1) return;
    const unsigned long bound = 1ul << 20;
    for (unsigned long p = 2; p <= bound && n > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) {
            // No factor below p and n < p^2, so n itself is prime.
            out[n] += sign;
            return;
        }
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        out[Integer(p)] += sign * e;
    }
    if (n == 1) return;
    long extra = 1;
    while (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2;; ++k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                n = root;
                extra *= static_cast<long>(k);
                break;
            }
            if (k > 64) throw FactorizationIncomplete("perfect power with no small root");
        }
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
        throw FactorizationIncomplete("cofactor " + n.get_str() + " is not a prime power");
    out[n] += sign * extra;
}

}  // namespace

std::map<Integer, long> prime_exponents(const Rational& value) {
    if (sgn(value) <= 0) throw NonPositiveInput("factorization needs a positive rational");
    std::map<Integer, long> out;
    factor_into(value.get_num(), +1, out);
    factor_into(value.get_den(), -1, out);
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

NcResult validate_nc(const Rational& r, const Rational& rho) {
    NcResult result;
    if (sgn(r) <= 0 || sgn(rho) <= 0) {
        result.rejection = NcRejection{NcClause::NonPositiveInput, std::nullopt,
                                       "slopes must be positive rationals"};
        return result;
    }
    if (r >= 1 || rho <= 1) {
        result.rejection =
            NcRejection{NcClause::OrderViolation, std::nullopt, "need 0 < r < 1 < rho"};
        return result;
    }

    const auto alpha = prime_exponents(r);
    const auto beta = prime_exponents(rho);

    // Dependent iff beta = (s/t) * alpha componentwise over the union of
    // primes.  Both vectors are nonzero because r != 1 and rho != 1.
    bool support_matches = alpha.size() == beta.size();
    if (support_matches) {
        for (const auto& [p, e] : alpha)
            if (beta.find(p) == beta.end()) {
                support_matches = false;
                break;
            }
    }
    if (support_matches) {
        const auto& [p0, a0] = *alpha.begin();
        const long b0 = beta.at(p0);
        // Candidate ratio s/t = b0/a0 in lowest terms with t > 0.
        long g = std::gcd(a0 < 0 ? -a0 : a0, b0 < 0 ? -b0 : b0);
        long s = b0 / g;
        long t = a0 / g;
        if (t < 0) {
            s = -s;
            t = -t;
        }
        bool dependent = true;
        for (const auto& [p, e] : alpha) {
            if (static_cast<long long>(beta.at(p)) * t != static_cast<long long>(e) * s) {
                dependent = false;
                break;
            }
        }
        if (dependent) {
            // r^k = rho^l for (k, l) = u * (s, t); normalize to k > 0.
            // Order checks above force s < 0 here, so (-s, -t) has k > 0.
            long k = -s;
            long l = -t;
            result.rejection =
                NcRejection{NcClause::Dependent, std::make_pair(k, l),
                            "r^" + std::to_string(k) + " = rho^" + std::to_string(l)};
            return result;
        }
    }

    result.pair.emplace(r, rho);
    return result;
}

SlopePair require_nc(const Rational& r, const Rational& rho) {
    NcResult res = validate_nc(r, rho);
    if (!res.accepted())
        throw InvalidConstraint("slope pair rejected: " + res.rejection->detail);
    return *res.pair;
}

Rational monomial_value(const SlopePair& sp, const Monomial& mono) {
    return rational_pow(sp.r, static_cast<long>(mono.m)) *
           rational_pow(sp.rho, static_cast<long>(mono.n));
}

bool relation_contains(const SlopePair& sp, const Rational& x, const Rational& y) {
    if (sgn(x) < 0 || x > 1 || sgn(y) < 0 || y > 1)
        throw OutOfUnitInterval("relation arguments must lie in [0,1]");
    return y == sp.r * x || y == sp.rho * x;
}

}  // namespace lelek
