#include "lelek/word.hpp"

#include <algorithm>

namespace lelek {

namespace {

// Letters of one climb segment: from running value v, reach a value in
// (1 - 2^-j, 1) through a run of r's followed by a run of rho's, both
// nonempty so the exponent trace keeps growing.  Narrow ratio windows can
// miss every lattice point under the first budget, so the search retries
// on a fixed ladder (still deterministic).
std::vector<Letter> climb_segment(const SlopePair& sp, const Rational& v, unsigned long j) {
    const Rational target_lo = Rational(1) - pow2(-static_cast<long>(j));
    SearchConstraint ratio;
    ratio.k_floor = 1;
    ratio.l_floor = 1;
    ratio.lo = target_lo / v;
    ratio.hi = Rational(1) / v;
    ratio.lo.canonicalize();
    ratio.hi.canonicalize();
    Monomial mono;
    for (unsigned long budget = kClimbBudget;; budget *= 16) {
        try {
            mono = find_monomial(sp, ratio, SearchOptions{budget, true});
            break;
        } catch (const SearchExhausted&) {
            if (budget >= (1ul << 22)) throw;
        }
    }
    std::vector<Letter> seg;
    seg.reserve(mono.m + mono.n);
    seg.insert(seg.end(), mono.m, Letter::R);
    seg.insert(seg.end(), mono.n, Letter::P);
    return seg;
}

}  // namespace

std::vector<Letter> expand_letters(const SlopePair& sp, const Rational& x, const Word& w,
                                   std::size_t count) {
    if (count > kDepthCap) throw DepthOverflow("letter expansion beyond depth cap");
    std::vector<Letter> out;
    out.reserve(count);
    for (std::size_t i = 0; i < w.prefix.size() && out.size() < count; ++i)
        out.push_back(w.prefix[i]);
    if (out.size() >= count) return out;

    switch (w.tail.kind) {
        case TailKind::ConstR:
            out.insert(out.end(), count - out.size(), Letter::R);
            break;
        case TailKind::ConstP:
            out.insert(out.end(), count - out.size(), Letter::P);
            break;
        case TailKind::Periodic: {
            if (w.tail.period.empty()) throw WordNotUsable("empty period");
            std::size_t i = 0;
            while (out.size() < count) {
                out.push_back(w.tail.period[i % w.tail.period.size()]);
                ++i;
            }
            break;
        }
        case TailKind::Climb: {
            if (sgn(x) <= 0) {
                // Vertex: letters are irrelevant, expand as all-r.
                out.insert(out.end(), count - out.size(), Letter::R);
                break;
            }
            Rational v = x;
            for (Letter l : w.prefix) v *= sp.slope(l);
            unsigned long j = w.tail.climb_start;
            while (out.size() < count) {
                const std::vector<Letter> seg = climb_segment(sp, v, j);
                for (Letter l : seg) {
                    v *= sp.slope(l);
                    out.push_back(l);
                    if (out.size() == count) break;
                }
                ++j;
            }
            break;
        }
    }
    return out;
}

std::vector<Rational> running_values(const SlopePair& sp, const Rational& x, const Word& w,
                                     std::size_t count) {
    const std::vector<Letter> letters = expand_letters(sp, x, w, count);
    std::vector<Rational> out;
    out.reserve(count);
    Rational v = x;
    for (Letter l : letters) {
        v *= sp.slope(l);
        out.push_back(v);
    }
    return out;
}

Rational period_product(const SlopePair& sp, const TailRule& tail) {
    if (tail.kind != TailKind::Periodic) throw WordNotUsable("period_product on non-periodic tail");
    Rational q(1);
    for (Letter l : tail.period) q *= sp.slope(l);
    return q;
}

Word word_push_front(Letter l, Word w) {
    w.prefix.insert(w.prefix.begin(), l);
    return w;
}

Word word_drop_front(const SlopePair& sp, const Rational& x, const Word& w) {
    return word_pop_front(sp, x, w).second;
}

std::pair<Letter, Word> word_pop_front(const SlopePair& sp, const Rational& x, const Word& w) {
    Word out = w;
    if (!out.prefix.empty()) {
        const Letter front = out.prefix.front();
        out.prefix.erase(out.prefix.begin());
        return {front, std::move(out)};
    }
    switch (out.tail.kind) {
        case TailKind::ConstR:
            return {Letter::R, std::move(out)};
        case TailKind::ConstP:
            return {Letter::P, std::move(out)};
        case TailKind::Periodic: {
            if (out.tail.period.empty()) throw WordNotUsable("empty period");
            const Letter front = out.tail.period.front();
            std::rotate(out.tail.period.begin(), out.tail.period.begin() + 1,
                        out.tail.period.end());
            return {front, std::move(out)};
        }
        case TailKind::Climb: {
            if (sgn(x) <= 0) return {Letter::R, std::move(out)};
            // Materialize the current segment, then drop from the prefix.
            out.prefix = climb_segment(sp, x, out.tail.climb_start);
            out.tail.climb_start += 1;
            const Letter front = out.prefix.front();
            out.prefix.erase(out.prefix.begin());
            return {front, std::move(out)};
        }
    }
    throw WordNotUsable("unreachable tail kind");
}

namespace {

// Shortest block whose repetition gives the period.
std::vector<Letter> primitive_period(const std::vector<Letter>& period) {
    const std::size_t n = period.size();
    for (std::size_t len = 1; len <= n / 2; ++len) {
        if (n % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < n && ok; ++i) ok = period[i] == period[i - len];
        if (ok) return std::vector<Letter>(period.begin(), period.begin() + len);
    }
    return period;
}

}  // namespace

Word normalized(Word w) {
    if (w.tail.kind == TailKind::Periodic) {
        if (w.tail.period.empty()) throw WordNotUsable("empty period");
        w.tail.period = primitive_period(w.tail.period);
        if (w.tail.period.size() == 1) {
            w.tail = w.tail.period[0] == Letter::R ? TailRule::const_r() : TailRule::const_p();
        }
    }
    switch (w.tail.kind) {
        case TailKind::ConstR:
            while (!w.prefix.empty() && w.prefix.back() == Letter::R) w.prefix.pop_back();
            break;
        case TailKind::ConstP:
            while (!w.prefix.empty() && w.prefix.back() == Letter::P) w.prefix.pop_back();
            break;
        case TailKind::Periodic:
            // prefix + (p1..pm)^inf equals prefix' + (pm p1..pm-1)^inf when
            // the prefix ends with pm; absorb greedily.
            while (!w.prefix.empty() && w.prefix.back() == w.tail.period.back()) {
                w.prefix.pop_back();
                std::rotate(w.tail.period.begin(), w.tail.period.end() - 1, w.tail.period.end());
            }
            break;
        case TailKind::Climb:
            break;
    }
    return w;
}

bool words_equal(const SlopePair& sp, const Rational& xa, const Word& a, const Rational& xb,
                 const Word& b, std::size_t climb_horizon) {
    const Word na = normalized(a);
    const Word nb = normalized(b);
    if (na.tail.kind != nb.tail.kind) return false;
    if (na.tail.kind == TailKind::Climb) {
        // Context-dependent letters: compare the expansions past both
        // prefixes.  Sound whenever the words really are equal; distinct
        // climbs that agree this far are out of scope.
        const std::size_t horizon =
            std::max(na.prefix.size(), nb.prefix.size()) + climb_horizon;
        return expand_letters(sp, xa, na, horizon) == expand_letters(sp, xb, nb, horizon);
    }
    return na.prefix == nb.prefix && na.tail.period == nb.tail.period;
}

}  // namespace lelek
