#include "lelek/search.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

namespace lelek {

namespace {

void check_constraint(const SearchConstraint& c) {
    if (sgn(c.lo) < 0) throw InvalidConstraint("target lower endpoint must be >= 0");
    if (!(c.lo < c.hi)) throw InvalidConstraint("target interval is empty");
}

bool exact_member(const SlopePair& sp, const Monomial& mono, const SearchConstraint& c) {
    const Rational v = monomial_value(sp, mono);
    return c.lo < v && v < c.hi;
}

}  // namespace

Monomial find_monomial(const SlopePair& sp, const SearchConstraint& c, const SearchOptions& opts) {
    check_constraint(c);
    const unsigned long budget = opts.budget;
    if (c.k_floor > budget || c.l_floor > budget)
        throw SearchExhausted("floors exceed budget " + std::to_string(budget), budget,
                              c.k_floor + c.l_floor);

    const double lr = sp.log_r.log_value;
    const double lp = sp.log_rho.log_value;
    const double step = lp - lr;  // > 0 since r < 1 < rho
    const bool lo_positive = sgn(c.lo) > 0;
    const LogScalar log_lo = lo_positive ? LogScalar::of_rational(c.lo) : LogScalar{};
    const LogScalar log_hi = LogScalar::of_rational(c.hi);

    for (unsigned long s = c.k_floor + c.l_floor; s <= 2 * budget; ++s) {
        unsigned long n_min = std::max(c.l_floor, s > budget ? s - budget : 0ul);
        unsigned long n_max = std::min(budget, s - c.k_floor);
        if (n_min > n_max) continue;

        double lo_bound = 0.0, hi_bound = 0.0;
        const double sd = static_cast<double>(s);
        if (opts.prune) {
            // value(m, n) on the diagonal is s*lr + n*step, increasing in n.
            const double margin = sd * (sp.log_r.err + sp.log_rho.err) +
                                  std::ldexp(sd * (std::abs(lr) + std::abs(lp)), -48) + 1e-12;
            hi_bound = log_hi.log_value + log_hi.err + margin;
            const double top = (hi_bound - sd * lr) / step;
            if (top < -1.0) continue;
            if (top < static_cast<double>(n_max)) {
                n_max = std::min(
                    n_max, static_cast<unsigned long>(std::max(0.0, std::ceil(top) + 1)));
            }
            lo_bound = lo_positive ? log_lo.log_value - log_lo.err - margin
                                   : -std::numeric_limits<double>::infinity();
            if (lo_positive) {
                const double bottom = (lo_bound - sd * lr) / step;
                if (bottom > static_cast<double>(n_max) + 1.0) continue;
                if (bottom > static_cast<double>(n_min)) {
                    n_min = std::max(
                        n_min, static_cast<unsigned long>(std::max(0.0, std::floor(bottom) - 1)));
                }
            }
            if (n_min > n_max) continue;
        }

        for (unsigned long n = n_min; n <= n_max; ++n) {
            if (opts.prune) {
                // Exact arithmetic only for candidates the enclosure cannot
                // already reject; the window's index slack stays cheap.
                const double f = sd * lr + static_cast<double>(n) * step;
                if (f < lo_bound || f > hi_bound) continue;
            }
            const Monomial cand{s - n, n};
            if (exact_member(sp, cand, c)) return cand;
        }
    }
    throw SearchExhausted("no monomial with max(m,n) <= " + std::to_string(budget) + " in (" +
                              rational_str(c.lo) + ", " + rational_str(c.hi) + ") above floors (" +
                              std::to_string(c.k_floor) + ", " + std::to_string(c.l_floor) + ")",
                          budget, 2 * budget);
}

DensityProfile density_profile(const SlopePair& sp, unsigned long bins, unsigned long k_floor,
                               unsigned long l_floor, const SearchOptions& opts) {
    if (bins == 0) throw InvalidConstraint("bins must be >= 1");
    DensityProfile out;
    out.bins = bins;
    out.witnesses.reserve(bins);
    for (unsigned long i = 0; i < bins; ++i) {
        SearchConstraint c;
        c.k_floor = k_floor;
        c.l_floor = l_floor;
        c.lo = Rational(static_cast<unsigned long>(i), bins);
        c.hi = Rational(i + 1, bins);
        c.lo.canonicalize();
        c.hi.canonicalize();
        try {
            out.witnesses.push_back(find_monomial(sp, c, opts));
        } catch (const SearchExhausted&) {
            out.witnesses.push_back(std::nullopt);
        }
    }
    return out;
}

}  // namespace lelek
