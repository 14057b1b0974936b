#pragma once

#include "lelek/fan.hpp"
#include "lelek/cylinder.hpp"

namespace lelek {

// A point of the inverse limit of the fan under its shift, in base/word
// coordinates: level k is
//
//   ( x/(c_{k-1}...c_1), ..., x/c_1, x, a_1 x, a_2 a_1 x, ... )
//
// Base 0 is the vertex (every level the fan vertex), mirroring FanPoint.
// Validity of a regular point demands x in (0,1], every backward ratio
// x/(c_k...c_1) strictly below 1, and a usable forward word.
struct InvLimPoint {
    Rational x;
    Word a;  // forward word
    Word c;  // backward word

    static InvLimPoint vertex() { return {Rational(0), Word::const_r(), Word::const_p()}; }
    static InvLimPoint regular(Rational x, Word a, Word c) {
        return {std::move(x), std::move(a), std::move(c)};
    }
};

bool is_vertex(const InvLimPoint& p);

enum class PairStatus { Valid, Invalid, Unknown };

enum class PairViolation { None, BaseRange, BackwardRatio, ForwardCoordinate, UnsupportedTail };

struct UsefulPairTag {
    PairStatus status = PairStatus::Unknown;
    std::size_t horizon = 0;
    PairViolation violation = PairViolation::None;
    // Index of the violating backward ratio / forward coordinate.
    std::size_t witness_index = 0;
};

// Decides validity analytically.  Backward tails must contract the ratios
// for every k: const-p and expanding periodic blocks qualify; const-r and
// contracting blocks are rejected with the first violating index.
UsefulPairTag validate_invlim(const SlopePair& sp, const InvLimPoint& p, std::size_t horizon);

// First `depth` coordinates of level k.
std::vector<Rational> k_coordinate(const SlopePair& sp, const InvLimPoint& p, std::size_t k,
                                   std::size_t depth);

// (x, a, c) -> (x/c_1, c_1 + a, c without c_1); the vertex is fixed.
InvLimPoint shift_forward(const SlopePair& sp, const InvLimPoint& p);

// (x, a, c) -> (a_1 x, a without a_1, a_1 + c); exact inverse of
// shift_forward on the symbolic representation.
InvLimPoint shift_backward(const SlopePair& sp, const InvLimPoint& p);

bool invlim_points_equal(const SlopePair& sp, const InvLimPoint& p, const InvLimPoint& q);

// Endpoint iff the forward part reaches sup 1 (backward ratios of a valid
// point stay strictly below 1); exact where the tails decide, Unknown
// otherwise.  The vertex is not an endpoint.
EndpointClass classify_endpoint_invlim(const SlopePair& sp, const InvLimPoint& p,
                                       std::size_t horizon, const Rational& tol);

// Exact infimum of the backward letter products c_1, c_2 c_1, ...; finite
// and attained for the admissible backward tails.
Rational backward_inf_products(const SlopePair& sp, const InvLimPoint& p);

// An endpoint within eps of t in the level metric: for the vertex, a tiny
// climb endpoint pushed down by forward shifts; otherwise a climb endpoint
// whose base approaches t's from below, forward word matched to the
// metric-relevant depth and backward word shared with t.
InvLimPoint endpoint_near(const SlopePair& sp, const InvLimPoint& t, const Rational& eps,
                          const SearchOptions& opts = {});

// max over levels n <= horizon of d(level_n(p), level_n(q)) / 2^n with the
// 2^-horizon tail bound.
MetricValue metric_D(const SlopePair& sp, const InvLimPoint& p, const InvLimPoint& q,
                     std::size_t horizon);

// Open constraint on inverse-limit points: base interval plus fixed
// forward and backward word prefixes.
struct InvLimCylinder {
    Interval base;
    std::vector<Letter> fwd;
    std::vector<Letter> bwd;
};

bool invlim_cylinder_contains(const SlopePair& sp, const InvLimCylinder& c, const InvLimPoint& p);

struct InvLimWitness {
    std::size_t n = 0;
    InvLimPoint point;
};

// A point of u whose n-th forward shift lies in v.  The backward word of
// the witness splices u's backward prefix, a free block sized by a lattice
// search on the base ratio, and v's forward prefix reversed, so the shifts
// replay exactly v's data.
InvLimWitness witness_transitivity_invlim(const SlopePair& sp, const InvLimCylinder& u,
                                          const InvLimCylinder& v,
                                          const SearchOptions& opts = {});

}  // namespace lelek
