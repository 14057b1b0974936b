#pragma once

#include "lelek/fan.hpp"

namespace lelek {

// Open interval (lo, hi) with exact endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& v) const { return lo < v && v < hi; }
    Rational width() const { return hi - lo; }
};

// Coherent cylinder U1 x ... x Un x [0,1]^inf with U_{i+1} = a_i * U_i.
// Only u1 and the word are stored; the later intervals are derived.
// Every derived interval stays inside (0, 1) (validated at construction).
struct Cylinder {
    Interval u1;
    std::vector<Letter> word;

    std::size_t depth() const { return word.size() + 1; }
};

Cylinder make_cylinder(const SlopePair& sp, Interval u1, std::vector<Letter> word);

// U_i for 1 <= i <= depth.
Interval interval_at(const SlopePair& sp, const Cylinder& c, std::size_t i);

// Exact coordinate membership: coordinate(p, i) in U_i for all i <= depth.
// For cylinders built by build_cylinder the intervals are narrow enough
// that membership forces the point's first depth-1 letters to equal the
// cylinder word.
bool cylinder_contains(const SlopePair& sp, const Cylinder& c, const FanPoint& p);

// The covering-lemma construction around z: a coherent cylinder with
// z inside, word equal to z's first n-1 letters, every interval inside
// (0,1), and metric diameter below eps.  n = max(min_depth,
// ceil(log2(1/eps))), so the free tail contributes less than eps.
// Requires the first n coordinates of z to avoid {0, 1}.
Cylinder build_cylinder(const SlopePair& sp, const FanPoint& z, const Rational& eps,
                        std::size_t min_depth = 1);

// Exact diameter of the cylinder under the weighted sup metric:
// max over i of 2^-i width(U_i) together with the 2^-(n+1) free tail.
Rational cylinder_diameter(const SlopePair& sp, const Cylinder& c);

// A concrete fan point inside the cylinder: monomial base in u1, the
// cylinder's word, then all-r padding.
FanPoint meets_fan(const SlopePair& sp, const Cylinder& c, const SearchOptions& opts = {});

}  // namespace lelek
