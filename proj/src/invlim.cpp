#include "lelek/invlim.hpp"

#include <algorithm>

namespace lelek {

bool is_vertex(const InvLimPoint& p) { return sgn(p.x) == 0; }

namespace {

constexpr std::size_t kWalkCap = std::size_t{1} << 22;

struct BackwardCheck {
    bool valid = false;
    std::size_t witness = 0;  // first k with product <= x when invalid
};

// All backward partial products must exceed x; decidable per tail class.
BackwardCheck check_backward(const SlopePair& sp, const Rational& x, const Word& c) {
    Rational prod(1);
    for (std::size_t k = 0; k < c.prefix.size(); ++k) {
        prod *= sp.slope(c.prefix[k]);
        if (prod <= x) return {false, k + 1};
    }
    const std::size_t base = c.prefix.size();
    switch (c.tail.kind) {
        case TailKind::ConstP:
            return {true, 0};  // products only grow
        case TailKind::Periodic: {
            const Rational q = period_product(sp, c.tail);
            if (q > 1) {
                Rational p2 = prod;
                for (std::size_t j = 0; j < c.tail.period.size(); ++j) {
                    p2 *= sp.slope(c.tail.period[j]);
                    if (p2 <= x) return {false, base + j + 1};
                }
                // Later windows repeat scaled by q^t > 1.
                return {true, 0};
            }
            // Contracting block: products decay to 0, find the violation.
            Rational p2 = prod;
            for (std::size_t j = 0; j < kWalkCap; ++j) {
                p2 *= sp.slope(c.tail.period[j % c.tail.period.size()]);
                if (p2 <= x) return {false, base + j + 1};
            }
            throw HorizonExceeded("backward violation beyond walk cap");
        }
        case TailKind::ConstR: {
            Rational p2 = prod;
            for (std::size_t j = 0; j < kWalkCap; ++j) {
                p2 *= sp.r;
                if (p2 <= x) return {false, base + j + 1};
            }
            throw HorizonExceeded("backward violation beyond walk cap");
        }
        case TailKind::Climb:
            return {false, 0};  // unsupported backward tail
    }
    return {false, 0};
}

struct ForwardCheck {
    bool valid = false;
    bool supported = true;
    std::size_t witness = 0;  // first coordinate index > 1 when invalid
};

// Coordinates x, x a_1, x a_1 a_2, ... must stay within [0, 1].
ForwardCheck check_forward(const SlopePair& sp, const Rational& x, const Word& a) {
    Rational v = x;
    if (v > 1) return {false, true, 1};
    for (std::size_t i = 0; i < a.prefix.size(); ++i) {
        v *= sp.slope(a.prefix[i]);
        if (v > 1) return {false, true, i + 2};
    }
    const std::size_t base = a.prefix.size() + 1;
    switch (a.tail.kind) {
        case TailKind::ConstR:
        case TailKind::Climb:
            return {true, true, 0};
        case TailKind::Periodic: {
            const Rational q = period_product(sp, a.tail);
            Rational v2 = v;
            if (q < 1) {
                for (std::size_t j = 0; j < a.tail.period.size(); ++j) {
                    v2 *= sp.slope(a.tail.period[j]);
                    if (v2 > 1) return {false, true, base + j + 1};
                }
                return {true, true, 0};
            }
            for (std::size_t j = 0; j < kWalkCap; ++j) {
                v2 *= sp.slope(a.tail.period[j % a.tail.period.size()]);
                if (v2 > 1) return {false, true, base + j + 1};
            }
            throw HorizonExceeded("forward violation beyond walk cap");
        }
        case TailKind::ConstP: {
            Rational v2 = v;
            for (std::size_t j = 0; j < kWalkCap; ++j) {
                v2 *= sp.rho;
                if (v2 > 1) return {false, true, base + j + 1};
            }
            throw HorizonExceeded("forward violation beyond walk cap");
        }
    }
    return {false, false, 0};
}

}  // namespace

UsefulPairTag validate_invlim(const SlopePair& sp, const InvLimPoint& p, std::size_t horizon) {
    UsefulPairTag tag;
    tag.horizon = horizon;
    if (is_vertex(p)) {
        tag.status = PairStatus::Valid;
        return tag;
    }
    if (sgn(p.x) < 0 || p.x > 1) {
        tag.status = PairStatus::Invalid;
        tag.violation = PairViolation::BaseRange;
        return tag;
    }
    if (p.c.tail.kind == TailKind::Climb) {
        tag.status = PairStatus::Invalid;
        tag.violation = PairViolation::UnsupportedTail;
        return tag;
    }
    const BackwardCheck bc = check_backward(sp, p.x, p.c);
    if (!bc.valid) {
        tag.status = PairStatus::Invalid;
        tag.violation = PairViolation::BackwardRatio;
        tag.witness_index = bc.witness;
        return tag;
    }
    const ForwardCheck fc = check_forward(sp, p.x, p.a);
    if (!fc.valid) {
        tag.status = PairStatus::Invalid;
        tag.violation = PairViolation::ForwardCoordinate;
        tag.witness_index = fc.witness;
        return tag;
    }
    tag.status = PairStatus::Valid;
    return tag;
}

std::vector<Rational> k_coordinate(const SlopePair& sp, const InvLimPoint& p, std::size_t k,
                                   std::size_t depth) {
    if (k == 0 || depth == 0) throw IndexOutOfRange("level and depth are 1-based");
    if (k > kDepthCap || depth > kDepthCap) throw HorizonExceeded("level or depth beyond cap");
    if (is_vertex(p)) return std::vector<Rational>(depth, Rational(0));

    std::vector<Rational> out;
    out.reserve(depth);
    if (k > 1) {
        const std::vector<Letter> bw = expand_letters(sp, p.x, p.c, k - 1);
        std::vector<Rational> products;  // c_1, c_2 c_1, ...
        products.reserve(k - 1);
        Rational prod(1);
        for (Letter l : bw) {
            prod *= sp.slope(l);
            products.push_back(prod);
        }
        // Deepest ratio first: position i carries x / (c_{k-i} ... c_1).
        for (std::size_t pos = 1; pos < k && out.size() < depth; ++pos)
            out.push_back(p.x / products[k - 1 - pos]);
    }
    if (out.size() < depth) out.push_back(p.x);
    if (out.size() < depth) {
        const std::vector<Rational> fwd = running_values(sp, p.x, p.a, depth - out.size());
        for (const Rational& v : fwd) out.push_back(v);
    }
    return out;
}

InvLimPoint shift_forward(const SlopePair& sp, const InvLimPoint& p) {
    if (is_vertex(p)) return p;
    auto [letter, rest] = word_pop_front(sp, p.x, p.c);
    return InvLimPoint::regular(p.x / sp.slope(letter), word_push_front(letter, p.a),
                                std::move(rest));
}

InvLimPoint shift_backward(const SlopePair& sp, const InvLimPoint& p) {
    if (is_vertex(p)) return p;
    auto [letter, rest] = word_pop_front(sp, p.x, p.a);
    return InvLimPoint::regular(p.x * sp.slope(letter), std::move(rest),
                                word_push_front(letter, p.c));
}

bool invlim_points_equal(const SlopePair& sp, const InvLimPoint& p, const InvLimPoint& q) {
    if (is_vertex(p) || is_vertex(q)) return is_vertex(p) && is_vertex(q);
    return p.x == q.x && words_equal(sp, p.x, p.a, q.x, q.a) &&
           words_equal(sp, p.x, p.c, q.x, q.c);
}

Rational backward_inf_products(const SlopePair& sp, const InvLimPoint& p) {
    if (is_vertex(p)) return Rational(1);
    Rational prod(1);
    bool have = false;
    Rational best(1);
    for (Letter l : p.c.prefix) {
        prod *= sp.slope(l);
        if (!have || prod < best) {
            best = prod;
            have = true;
        }
    }
    switch (p.c.tail.kind) {
        case TailKind::ConstP: {
            // Products grow past the prefix; the first tail product is the
            // only additional candidate.
            Rational cand = prod * sp.rho;
            if (!have || cand < best) best = cand;
            return best;
        }
        case TailKind::Periodic: {
            if (period_product(sp, p.c.tail) <= 1)
                throw WordNotUsable("backward infimum needs an expanding tail");
            Rational p2 = prod;
            for (Letter l : p.c.tail.period) {
                p2 *= sp.slope(l);
                if (!have || p2 < best) {
                    best = p2;
                    have = true;
                }
            }
            return best;
        }
        default:
            throw WordNotUsable("backward infimum needs a const-p or expanding periodic tail");
    }
}

EndpointClass classify_endpoint_invlim(const SlopePair& sp, const InvLimPoint& p,
                                       std::size_t horizon, const Rational& tol) {
    if (is_vertex(p)) return {EndpointKind::NotEndpoint, 0};
    const EndpointClass forward = classify_endpoint(sp, FanPoint{p.x, p.a}, horizon, tol);
    if (forward.kind != EndpointKind::NotEndpoint) return forward;
    // Forward sup below 1 exactly; backward ratios of a valid point stay
    // strictly below 1 as well, so the verdict holds unless the backward
    // data is out of contract.
    const Rational sup_backward = p.x / backward_inf_products(sp, p);
    if (sup_backward >= 1) return {EndpointKind::Unknown, forward.checked_depth};
    return forward;
}

InvLimPoint endpoint_near(const SlopePair& sp, const InvLimPoint& t, const Rational& eps,
                          const SearchOptions& opts) {
    if (sgn(eps) <= 0) throw InvalidEps("eps must be positive");

    InvLimPoint out = InvLimPoint::vertex();
    if (is_vertex(t)) {
        const unsigned long h = eps < 1 ? ceil_log2_inverse(eps) : 0;
        SearchConstraint seed;
        seed.k_floor = 1;
        seed.l_floor = 1;
        seed.lo = pow2(-static_cast<long>(h) - 3);
        seed.hi = pow2(-static_cast<long>(h) - 2);
        const FanPoint e = make_endpoint(sp, seed, opts);
        out = InvLimPoint::regular(e.x, e.word, Word::const_p());
        for (unsigned long i = 0; i < h + 2; ++i) out = shift_forward(sp, out);
    } else {
        // Match t's forward letters far enough that the free tail of the
        // metric cannot see past them.
        const Rational quarter = eps / 4;
        const std::size_t match = quarter < 1 ? ceil_log2_inverse(quarter) : 0;
        const std::vector<Letter> prefix = expand_letters(sp, t.x, t.a, match);

        Rational delta = t.x;
        {
            Rational fprod(1);  // F_{i-1} while visiting position i
            const Rational half_eps = eps / 2;
            for (std::size_t i = 1; i <= match + 1; ++i) {
                Rational bound = half_eps * pow2(static_cast<long>(i)) / fprod;
                if (bound < delta) delta = bound;
                if (i <= prefix.size()) fprod *= sp.slope(prefix[i - 1]);
            }
        }
        const Rational inf_c = backward_inf_products(sp, t);
        Rational bwd_bound = inf_c * eps / 2;
        if (bwd_bound < delta) delta = bwd_bound;
        delta /= 2;

        SearchConstraint seed;
        seed.k_floor = 1;
        seed.l_floor = 1;
        seed.lo = t.x - delta;
        seed.hi = t.x;
        const Monomial base = find_monomial(sp, seed, opts);
        Word forward;
        forward.prefix = prefix;
        forward.tail = TailRule::climb(1);
        out = InvLimPoint::regular(monomial_value(sp, base), std::move(forward), t.c);
    }

    // Exact certificate: endpoint classification plus the metric bound at a
    // horizon deep enough for the tail.
    std::size_t horizon = 24;
    if (eps < 1) horizon = std::max<std::size_t>(horizon, ceil_log2_inverse(eps) + 4);
    horizon = std::min(horizon, kDepthCap);
    const MetricValue dist = metric_D(sp, t, out, horizon);
    if (dist.value + dist.tail_bound >= eps)
        throw SearchExhausted("endpoint_near certificate failed", opts.budget, horizon);
    return out;
}

MetricValue metric_D(const SlopePair& sp, const InvLimPoint& p, const InvLimPoint& q,
                     std::size_t horizon) {
    if (horizon == 0) throw IndexOutOfRange("horizon must be >= 1");
    if (horizon > kDepthCap) throw HorizonExceeded("horizon beyond cap");

    struct Levels {
        bool vertex;
        Rational x;
        std::vector<Rational> backward;  // x/c_1, x/(c_2 c_1), ...
        std::vector<Rational> forward;   // x a_1, x a_1 a_2, ...
    };
    auto prepare = [&](const InvLimPoint& pt) {
        Levels lv;
        lv.vertex = is_vertex(pt);
        if (lv.vertex) return lv;
        lv.x = pt.x;
        const std::vector<Letter> bw = expand_letters(sp, pt.x, pt.c, horizon - 1);
        Rational prod(1);
        for (Letter l : bw) {
            prod *= sp.slope(l);
            lv.backward.push_back(pt.x / prod);
        }
        lv.forward = running_values(sp, pt.x, pt.a, horizon - 1);
        return lv;
    };
    auto coord = [](const Levels& lv, std::size_t n, std::size_t i) -> Rational {
        if (lv.vertex) return Rational(0);
        if (i < n) return lv.backward[n - i - 1];
        if (i == n) return lv.x;
        return lv.forward[i - n - 1];
    };

    const Levels lp = prepare(p);
    const Levels lq = prepare(q);

    std::vector<Rational> weights(2 * horizon + 1);
    weights[0] = 1;
    for (std::size_t i = 1; i < weights.size(); ++i) weights[i] = weights[i - 1] / 2;

    Rational best(0);
    for (std::size_t n = 1; n <= horizon; ++n) {
        for (std::size_t i = 1; i <= horizon; ++i) {
            Rational term = abs(coord(lp, n, i) - coord(lq, n, i)) * weights[n + i];
            if (term > best) best = term;
        }
    }
    return MetricValue{best, pow2(-static_cast<long>(horizon))};
}

bool invlim_cylinder_contains(const SlopePair& sp, const InvLimCylinder& c,
                              const InvLimPoint& p) {
    if (is_vertex(p)) return false;
    if (!c.base.contains(p.x)) return false;
    if (expand_letters(sp, p.x, p.a, c.fwd.size()) != c.fwd) return false;
    if (expand_letters(sp, p.x, p.c, c.bwd.size()) != c.bwd) return false;
    return validate_invlim(sp, p, c.fwd.size() + c.bwd.size() + 8).status == PairStatus::Valid;
}

namespace {

// Largest open base range compatible with the cylinder's word prefixes:
// forward coordinates strictly below 1 and backward ratios strictly below 1.
Interval feasible_base(const SlopePair& sp, const InvLimCylinder& c) {
    Rational ub = c.base.hi;
    if (ub > 1) ub = 1;
    Rational fprod(1);
    for (Letter l : c.fwd) {
        fprod *= sp.slope(l);
        Rational cap = Rational(1) / fprod;
        if (cap < ub) ub = cap;
    }
    Rational bprod(1);
    for (Letter l : c.bwd) {
        bprod *= sp.slope(l);
        if (bprod < ub) ub = bprod;
    }
    return Interval{c.base.lo, ub};
}

}  // namespace

InvLimWitness witness_transitivity_invlim(const SlopePair& sp, const InvLimCylinder& u,
                                          const InvLimCylinder& v, const SearchOptions& opts) {
    const Interval fu = feasible_base(sp, u);
    const Interval fv = feasible_base(sp, v);
    if (!(fu.lo < fu.hi) || !(fv.lo < fv.hi))
        throw InconsistentConstraints("cylinder word prefixes force the base out of range");

    SearchConstraint base_u;
    base_u.k_floor = 1;
    base_u.l_floor = 1;
    base_u.lo = fu.lo;
    base_u.hi = fu.hi;
    const Monomial xu_mono = find_monomial(sp, base_u, opts);
    const Rational xu = monomial_value(sp, xu_mono);

    Rational pb(1);
    for (Letter l : u.bwd) pb *= sp.slope(l);
    Rational pfv(1);
    for (Letter l : v.fwd) pfv *= sp.slope(l);

    // Free block product F solves x_u / (pb * F * pfv) into v's base range.
    SearchConstraint free_c;
    free_c.lo = xu / (pb * pfv * fv.hi);
    free_c.hi = xu / (pb * pfv * fv.lo);
    free_c.lo.canonicalize();
    free_c.hi.canonicalize();

    for (unsigned long attempt = 0; attempt < 2; ++attempt) {
        const Monomial free_mono = find_monomial(sp, free_c, opts);

        Word a;
        a.prefix = u.fwd;
        a.tail = TailRule::const_r();
        Word c;
        c.prefix = u.bwd;
        // P-first keeps the backward partial products above the dip at the
        // block's end, which equals x_u / (x_v * pfv) by construction.
        c.prefix.insert(c.prefix.end(), free_mono.n, Letter::P);
        c.prefix.insert(c.prefix.end(), free_mono.m, Letter::R);
        c.prefix.insert(c.prefix.end(), v.fwd.rbegin(), v.fwd.rend());
        c.prefix.insert(c.prefix.end(), v.bwd.begin(), v.bwd.end());
        c.tail = TailRule::const_p();

        InvLimWitness out;
        out.n = u.bwd.size() + free_mono.m + free_mono.n + v.fwd.size();
        out.point = InvLimPoint::regular(xu, std::move(a), std::move(c));

        InvLimPoint shifted = out.point;
        for (std::size_t i = 0; i < out.n; ++i) shifted = shift_forward(sp, shifted);
        if (invlim_cylinder_contains(sp, u, out.point) &&
            invlim_cylinder_contains(sp, v, shifted))
            return out;

        // Should not happen for consistent constraints; take the next
        // candidate strictly above and re-check once.
        free_c.k_floor = free_mono.m + 1;
        free_c.l_floor = free_mono.n + 1;
    }
    throw SearchExhausted("no verified transitivity witness within budget", opts.budget, 0);
}

}  // namespace lelek
