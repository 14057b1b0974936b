#pragma once

#include <optional>
#include <vector>

#include "lelek/slope.hpp"

namespace lelek {

// Target window for the lattice search: find r^m * rho^n strictly inside
// (lo, hi) with m >= k_floor and n >= l_floor.  lo = 0 stands for the open
// interval (0, hi); monomials are always positive.
struct SearchConstraint {
    unsigned long k_floor = 0;
    unsigned long l_floor = 0;
    Rational lo;
    Rational hi;
};

struct SearchOptions {
    // Bounds max(m, n) of every candidate.
    unsigned long budget = 512;
    // Log-domain interval pruning; answers are identical with it off,
    // just slower (tested).
    bool prune = true;
};

// Deterministic: minimal m + n, ties broken by minimal n.  Membership of
// the winner is always re-verified in exact arithmetic.
Monomial find_monomial(const SlopePair& sp, const SearchConstraint& c,
                       const SearchOptions& opts = {});

struct DensityProfile {
    unsigned long bins = 0;
    // witnesses[i] covers ((i)/bins, (i+1)/bins); nullopt marks per-bin
    // exhaustion.
    std::vector<std::optional<Monomial>> witnesses;
};

DensityProfile density_profile(const SlopePair& sp, unsigned long bins, unsigned long k_floor,
                               unsigned long l_floor, const SearchOptions& opts = {});

}  // namespace lelek
