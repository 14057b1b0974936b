#pragma once

#include <optional>

#include "lelek/word.hpp"

namespace lelek {

// A point of the fan: base value plus the word of slopes.  Coordinate i is
// x * (product of the first i-1 letters).  Base 0 is the vertex whatever
// the word says.
struct FanPoint {
    Rational x;
    Word word;
};

bool is_vertex(const FanPoint& p);

Rational coordinate(const SlopePair& sp, const FanPoint& p, std::size_t i);

// Coordinates 1..depth.
std::vector<Rational> coordinates(const SlopePair& sp, const FanPoint& p, std::size_t depth);

// nullopt when coordinates 1..depth all lie in [0,1]; otherwise the first
// violating index.
std::optional<std::size_t> validate_point(const SlopePair& sp, const FanPoint& p,
                                          std::size_t depth);

// Drops the first coordinate: (x, w) -> (x * slope(w_1), w without w_1).
// The vertex is a fixed point.
FanPoint shift(const SlopePair& sp, const FanPoint& p);

enum class EndpointKind { Endpoint, NotEndpoint, Unknown };

struct EndpointClass {
    EndpointKind kind = EndpointKind::Unknown;
    // For Unknown: how far the coordinates were examined.  0 for purely
    // analytic verdicts.
    std::size_t checked_depth = 0;

    friend bool operator==(const EndpointClass&, const EndpointClass&) = default;
};

// Three-valued: Endpoint when a coordinate hits 1 exactly or the tail
// forces sup = 1 (climb tails); NotEndpoint when the tail bounds the sup
// below 1 exactly (const-r, contracting periodic); Unknown otherwise.
// `depth` caps the scan in the undecidable cases and `tol` stops it early
// once the running value exceeds 1 - tol.
EndpointClass classify_endpoint(const SlopePair& sp, const FanPoint& p, std::size_t depth,
                                const Rational& tol);

// Constructive endpoint: monomial base inside seed's target and a climb
// tail, so classification is Endpoint analytically.  The target must sit
// inside (0, 1).
FanPoint make_endpoint(const SlopePair& sp, const SearchConstraint& seed,
                       const SearchOptions& opts = {});

struct MetricValue {
    Rational value;
    Rational tail_bound;
};

// sup over i <= depth of 2^-i |pi(p) - pi(q)|, with 2^-depth bounding the
// ignored tail.
MetricValue metric_d(const SlopePair& sp, const FanPoint& p, const FanPoint& q,
                     std::size_t depth);

// Sample points of the arc indexed by `word`: coordinate vectors of
// (t, a1 t, a2 a1 t, ...) for t on an even grid of [0, t_max], where t_max
// is 1 over the largest running product seen up to `depth`.  Climb tails
// are rejected: their letters depend on the owning point, so they index no
// single arc.
std::vector<std::vector<Rational>> arc_sample(const SlopePair& sp, const Word& word,
                                              std::size_t depth, std::size_t samples);

bool fan_points_equal(const SlopePair& sp, const FanPoint& a, const FanPoint& b);

}  // namespace lelek
