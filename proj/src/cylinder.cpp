#include "lelek/cylinder.hpp"

#include <algorithm>

namespace lelek {

Cylinder make_cylinder(const SlopePair& sp, Interval u1, std::vector<Letter> word) {
    if (!(sgn(u1.lo) > 0 && u1.lo < u1.hi && u1.hi < 1))
        throw InvalidCylinder("u1 must satisfy 0 < lo < hi < 1");
    Cylinder c{std::move(u1), std::move(word)};
    // Positive scaling keeps lo > 0; only the upper ends need checking.
    Rational hi = c.u1.hi;
    for (Letter l : c.word) {
        hi *= sp.slope(l);
        if (hi >= 1) throw InvalidCylinder("derived interval escapes (0,1)");
    }
    return c;
}

Interval interval_at(const SlopePair& sp, const Cylinder& c, std::size_t i) {
    if (i == 0 || i > c.depth()) throw IndexOutOfRange("cylinder interval index out of range");
    Interval out = c.u1;
    for (std::size_t j = 0; j + 1 < i; ++j) {
        out.lo *= sp.slope(c.word[j]);
        out.hi *= sp.slope(c.word[j]);
    }
    return out;
}

bool cylinder_contains(const SlopePair& sp, const Cylinder& c, const FanPoint& p) {
    const std::vector<Rational> coords = coordinates(sp, p, c.depth());
    Interval u = c.u1;
    for (std::size_t i = 0; i < c.depth(); ++i) {
        if (!u.contains(coords[i])) return false;
        if (i + 1 < c.depth()) {
            u.lo *= sp.slope(c.word[i]);
            u.hi *= sp.slope(c.word[i]);
        }
    }
    return true;
}

Cylinder build_cylinder(const SlopePair& sp, const FanPoint& z, const Rational& eps,
                        std::size_t min_depth) {
    if (sgn(eps) <= 0) throw InvalidEps("eps must be positive");
    if (min_depth == 0) throw IndexOutOfRange("min_depth must be >= 1");

    std::size_t n = min_depth;
    if (eps < 1) {
        unsigned long d;
        try {
            d = ceil_log2_inverse(eps);
        } catch (const EpsilonTooSmall&) {
            throw EpsilonTooSmall("depth for eps exceeds the depth cap");
        }
        n = std::max<std::size_t>(n, d);
    }
    if (n > kDepthCap) throw EpsilonTooSmall("depth for eps exceeds the depth cap");

    const std::vector<Rational> coords = coordinates(sp, z, n);
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(coords[i]) <= 0 || coords[i] >= 1)
            throw BoundaryCoordinate("coordinate " + std::to_string(i + 1) + " not in (0,1)",
                                     i + 1);
    const std::vector<Letter> letters = expand_letters(sp, z.x, z.word, n - 1);

    // delta_i = min(1, rho z_i) - r z_i separates the two letter images;
    // interval half-widths below delta/2 pin the word inside the cylinder.
    Rational delta(1);
    bool have_delta = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Rational rho_z = sp.rho * coords[i];
        Rational di = (rho_z < 1 ? rho_z : Rational(1)) - sp.r * coords[i];
        if (!have_delta || di < delta) {
            delta = di;
            have_delta = true;
        }
    }

    // Half-width h: half of the smallest of delta/2, the quarter-distances
    // of each z_i to {0,1}, and eps 2^i / 2 (minimal at i = 1).
    Rational h = have_delta ? delta / 2 : Rational(1);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational above = Rational(1) - coords[i];
        Rational dist = coords[i] < above ? coords[i] : above;
        dist /= 4;
        if (dist < h) h = dist;
    }
    if (eps < h) h = eps;
    h /= 2;

    // W_n = O'_n, W_i = O'_i  intersect (1/a_i) W_{i+1}; the cylinder base
    // is W_1 and coherence defines the rest.
    Interval w{coords[n - 1] - h, coords[n - 1] + h};
    for (std::size_t idx = n - 1; idx-- > 0;) {
        const Rational& a = sp.slope(letters[idx]);
        Interval scaled{w.lo / a, w.hi / a};
        Interval oi{coords[idx] - h, coords[idx] + h};
        w.lo = std::max(oi.lo, scaled.lo);
        w.hi = std::min(oi.hi, scaled.hi);
    }

    std::vector<Letter> word(letters.begin(), letters.begin() + (n - 1));
    return make_cylinder(sp, Interval{w.lo, w.hi}, std::move(word));
}

Rational cylinder_diameter(const SlopePair& sp, const Cylinder& c) {
    Rational best = pow2(-static_cast<long>(c.depth() + 1));
    Interval u = c.u1;
    for (std::size_t i = 1; i <= c.depth(); ++i) {
        Rational term = u.width() * pow2(-static_cast<long>(i));
        if (term > best) best = term;
        if (i < c.depth()) {
            u.lo *= sp.slope(c.word[i - 1]);
            u.hi *= sp.slope(c.word[i - 1]);
        }
    }
    return best;
}

FanPoint meets_fan(const SlopePair& sp, const Cylinder& c, const SearchOptions& opts) {
    SearchConstraint target;
    target.k_floor = 1;
    target.l_floor = 1;
    target.lo = c.u1.lo;
    target.hi = c.u1.hi;
    const Monomial mono = find_monomial(sp, target, opts);
    Word w;
    w.prefix = c.word;
    w.tail = TailRule::const_r();
    return FanPoint{monomial_value(sp, mono), std::move(w)};
}

}  // namespace lelek
