#include "lelek/fan.hpp"

#include <algorithm>

namespace lelek {

bool is_vertex(const FanPoint& p) { return sgn(p.x) == 0; }

Rational coordinate(const SlopePair& sp, const FanPoint& p, std::size_t i) {
    if (i == 0) throw IndexOutOfRange("coordinates are 1-based");
    if (i > kDepthCap) throw DepthOverflow("coordinate index beyond depth cap");
    if (is_vertex(p)) return Rational(0);
    if (i == 1) return p.x;
    return running_values(sp, p.x, p.word, i - 1).back();
}

std::vector<Rational> coordinates(const SlopePair& sp, const FanPoint& p, std::size_t depth) {
    if (depth == 0) throw IndexOutOfRange("depth must be >= 1");
    if (depth > kDepthCap) throw DepthOverflow("depth beyond cap");
    std::vector<Rational> out;
    out.reserve(depth);
    if (is_vertex(p)) {
        out.assign(depth, Rational(0));
        return out;
    }
    out.push_back(p.x);
    if (depth > 1) {
        std::vector<Rational> rest = running_values(sp, p.x, p.word, depth - 1);
        for (auto& v : rest) out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::size_t> validate_point(const SlopePair& sp, const FanPoint& p,
                                          std::size_t depth) {
    const std::vector<Rational> coords = coordinates(sp, p, depth);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (sgn(coords[i]) < 0 || coords[i] > 1) return i + 1;
    return std::nullopt;
}

FanPoint shift(const SlopePair& sp, const FanPoint& p) {
    if (is_vertex(p)) return p;
    auto [letter, rest] = word_pop_front(sp, p.x, p.word);
    return FanPoint{p.x * sp.slope(letter), std::move(rest)};
}

namespace {

// Scan coordinates of a presentation whose values eventually grow (const-p
// or expanding periodic tails): decidable only when a coordinate hits 1.
EndpointClass scan_expanding(const SlopePair& sp, const FanPoint& p, std::size_t depth,
                             const Rational& tol) {
    const Rational near_one = Rational(1) - tol;
    const std::vector<Letter> letters = expand_letters(sp, p.x, p.word, depth - 1);
    Rational v = p.x;
    std::size_t i = 1;
    for (;;) {
        if (v == 1) return {EndpointKind::Endpoint, i};
        if (v > 1) return {EndpointKind::Unknown, i > 0 ? i - 1 : 0};
        if (sgn(tol) > 0 && v > near_one) return {EndpointKind::Unknown, i};
        if (i >= depth) return {EndpointKind::Unknown, depth};
        v *= sp.slope(letters[i - 1]);
        ++i;
    }
}

}  // namespace

EndpointClass classify_endpoint(const SlopePair& sp, const FanPoint& p, std::size_t depth,
                                const Rational& tol) {
    if (depth == 0) throw IndexOutOfRange("depth must be >= 1");
    if (depth > kDepthCap) throw DepthOverflow("depth beyond cap");
    if (is_vertex(p)) return {EndpointKind::NotEndpoint, 0};

    const std::size_t prefix_len = p.word.prefix.size();
    switch (p.word.tail.kind) {
        case TailKind::Climb: {
            // The climb enters (1 - 2^-j, 1) for every j, so the sup is 1.
            return {EndpointKind::Endpoint, 0};
        }
        case TailKind::ConstR: {
            // Values decrease past the prefix; the sup is attained within
            // coordinates 1..prefix+1 and is exactly computable.
            const std::size_t window = std::min(kDepthCap, prefix_len + 1);
            const std::vector<Rational> coords = coordinates(sp, p, window);
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (coords[i] == 1) return {EndpointKind::Endpoint, i + 1};
            return {EndpointKind::NotEndpoint, window};
        }
        case TailKind::Periodic: {
            const Rational q = period_product(sp, p.word.tail);
            if (q < 1) {
                // Each full period contracts, so the sup is attained within
                // the prefix plus one period.
                const std::size_t window =
                    std::min(kDepthCap, prefix_len + p.word.tail.period.size() + 1);
                const std::vector<Rational> coords = coordinates(sp, p, window);
                for (std::size_t i = 0; i < coords.size(); ++i)
                    if (coords[i] == 1) return {EndpointKind::Endpoint, i + 1};
                return {EndpointKind::NotEndpoint, window};
            }
            // q = 1 is impossible for never-connecting slopes.
            return scan_expanding(sp, p, depth, tol);
        }
        case TailKind::ConstP:
            return scan_expanding(sp, p, depth, tol);
    }
    return {EndpointKind::Unknown, 0};
}

FanPoint make_endpoint(const SlopePair& sp, const SearchConstraint& seed,
                       const SearchOptions& opts) {
    if (seed.hi > 1) throw InvalidConstraint("endpoint base target must sit inside (0,1)");
    const Monomial mono = find_monomial(sp, seed, opts);
    return FanPoint{monomial_value(sp, mono), Word{{}, TailRule::climb(1)}};
}

MetricValue metric_d(const SlopePair& sp, const FanPoint& p, const FanPoint& q,
                     std::size_t depth) {
    const std::vector<Rational> cp = coordinates(sp, p, depth);
    const std::vector<Rational> cq = coordinates(sp, q, depth);
    Rational best(0);
    for (std::size_t i = 0; i < depth; ++i) {
        Rational term = abs(cp[i] - cq[i]) * pow2(-static_cast<long>(i + 1));
        if (term > best) best = term;
    }
    return MetricValue{best, pow2(-static_cast<long>(depth))};
}

std::vector<std::vector<Rational>> arc_sample(const SlopePair& sp, const Word& word,
                                              std::size_t depth, std::size_t samples) {
    if (depth == 0) throw IndexOutOfRange("depth must be >= 1");
    if (depth > kDepthCap) throw DepthOverflow("depth beyond cap");
    if (samples < 2) throw InvalidConstraint("need at least 2 samples");
    if (word.tail.kind == TailKind::Climb)
        throw WordNotUsable("climb tails index no single arc");

    // Running products 1, a1, a1 a2, ... up to depth-1 letters.
    const std::vector<Letter> letters = expand_letters(sp, Rational(1), word, depth - 1);
    std::vector<Rational> products;
    products.reserve(depth);
    products.emplace_back(1);
    for (Letter l : letters) products.push_back(products.back() * sp.slope(l));

    const Rational max_product = *std::max_element(products.begin(), products.end());
    const Rational t_max = Rational(1) / max_product;

    std::vector<std::vector<Rational>> out;
    out.reserve(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        Rational t = t_max * Rational(static_cast<unsigned long>(j), samples - 1);
        t.canonicalize();
        std::vector<Rational> row;
        row.reserve(depth);
        for (const Rational& prod : products) row.push_back(t * prod);
        out.push_back(std::move(row));
    }
    return out;
}

bool fan_points_equal(const SlopePair& sp, const FanPoint& a, const FanPoint& b) {
    if (is_vertex(a) || is_vertex(b)) return is_vertex(a) && is_vertex(b);
    return a.x == b.x && words_equal(sp, a.x, a.word, b.x, b.word);
}

}  // namespace lelek
