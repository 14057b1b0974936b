#pragma once

#include <variant>

#include "lelek/cylinder.hpp"

namespace lelek {

// dk letters r then dl letters p, moving the running monomial from one
// cylinder entry toward the next.  The value reached by the final p letter
// belongs to the following traverse block.
struct BridgeBlock {
    unsigned long dk = 0;
    unsigned long dl = 0;
};

// Walk of one cylinder's word, entered at a monomial inside its base
// interval.  Letters are copied in so a program replays standalone.
struct TraverseBlock {
    std::size_t cyl_index = 0;
    std::vector<Letter> letters;
};

using Block = std::variant<BridgeBlock, TraverseBlock>;

struct Visit {
    std::size_t cyl_index = 0;
    // shift^offset of the realized point enters the cylinder.
    std::size_t offset = 0;
};

struct OrbitProgram {
    SlopePair slopes;
    std::vector<Block> blocks;
    // Entry exponents (k, l) at each visit; strictly increasing in both
    // components across visits.
    std::vector<std::pair<unsigned long, unsigned long>> trace;
    std::vector<Visit> visits;
};

// Builds the block decomposition visiting every cylinder in order.  The
// first bridge starts the orbit at value r; every later entry uses floors
// strictly above the current exponent trace.  `opts.budget` is headroom on
// top of the current floors for each entry search.
OrbitProgram synthesize(const SlopePair& sp, const std::vector<Cylinder>& cyls,
                        const SearchOptions& opts = {});

// Total number of coordinates the program realizes.
std::size_t realized_length(const OrbitProgram& p);

struct Realization {
    // Coordinates 1..length of the orbit point, exact.
    std::vector<Rational> values;
    // The associated word between them (length-1 letters).
    std::vector<Letter> word;
};

Realization realize(const OrbitProgram& p, std::size_t length);

// The realized prefix as a fan point (all-r padding past the program).
FanPoint orbit_point(const OrbitProgram& p);

struct VisitCertificate {
    std::size_t cyl_index = 0;
    std::size_t offset = 0;
    std::vector<Rational> coords;
    bool pass = false;
};

// Independent re-check: replays the letter stream from scratch (never the
// exponent trace) and tests each visit's coordinates against the cylinder
// intervals exactly.
std::vector<VisitCertificate> verify(const OrbitProgram& p, const std::vector<Cylinder>& cyls);

struct TransitivityWitness {
    std::size_t n = 0;
    FanPoint point;
};

// A point of u whose n-th shift lies in v: enter u at a monomial, walk u's
// word, bridge to a monomial in v's base interval, walk v, pad with r's.
TransitivityWitness witness_transitivity(const SlopePair& sp, const Cylinder& u,
                                         const Cylinder& v, const SearchOptions& opts = {});

struct NonInjectivityPair {
    FanPoint p1;
    FanPoint p2;
    FanPoint q;
};

// Two distinct points with the same shift image: p1 = (r t, p + w) and
// p2 = (rho t, r + w) both shift to q = (r rho t, w), with t = 1/(2 rho)
// keeping every coordinate inside [0, 1].
NonInjectivityPair non_injectivity_witness(const SlopePair& sp);

}  // namespace lelek
