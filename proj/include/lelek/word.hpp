#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lelek/search.hpp"
#include "lelek/slope.hpp"

namespace lelek {

// Coordinates per point are capped so exact denominators stay bounded.
inline constexpr std::size_t kDepthCap = std::size_t{1} << 16;

enum class TailKind { ConstR, ConstP, Periodic, Climb };

// Finite presentation of the infinite part of a word.
//
//   ConstR / ConstP  all r's / all rho's.
//   Periodic         the given nonempty block repeated.
//   Climb            letters chosen so the running coordinate value enters
//                    (1 - 2^-j, 1) for j = start, start+1, ...; each climb
//                    step is a run of r's followed by a run of rho's found
//                    by the lattice search.  Expansion therefore depends on
//                    the owning point's base value.
struct TailRule {
    TailKind kind = TailKind::ConstR;
    std::vector<Letter> period;    // Periodic only
    unsigned long climb_start = 1; // Climb only

    static TailRule const_r() { return {}; }
    static TailRule const_p() { return {TailKind::ConstP, {}, 1}; }
    static TailRule periodic(std::vector<Letter> block) {
        return {TailKind::Periodic, std::move(block), 1};
    }
    static TailRule climb(unsigned long start = 1) { return {TailKind::Climb, {}, start}; }
};

struct Word {
    std::vector<Letter> prefix;
    TailRule tail;

    static Word const_r() { return {{}, TailRule::const_r()}; }
    static Word const_p() { return {{}, TailRule::const_p()}; }
};

// Budget for the per-step searches inside climb expansion.
inline constexpr unsigned long kClimbBudget = 4096;

// First `count` letters of the word attached to a point with base value
// `x`; deterministic.  Non-climb tails ignore `x`.
std::vector<Letter> expand_letters(const SlopePair& sp, const Rational& x, const Word& w,
                                   std::size_t count);

// Running products x * a_1, x * a_1 a_2, ... of the first `count` letters:
// exactly the coordinates 2..count+1 of the point (x, w).
std::vector<Rational> running_values(const SlopePair& sp, const Rational& x, const Word& w,
                                     std::size_t count);

// Exact product of one period block (Periodic tails).
Rational period_product(const SlopePair& sp, const TailRule& tail);

Word word_push_front(Letter l, Word w);

// Drops the first letter.  On an unexpanded climb tail this first
// materializes the current climb segment (which needs the base value).
Word word_drop_front(const SlopePair& sp, const Rational& x, const Word& w);

std::pair<Letter, Word> word_pop_front(const SlopePair& sp, const Rational& x, const Word& w);

// Canonical form: primitive period, single-letter periods folded to the
// const rules, and prefix letters absorbed into the tail where possible.
// Climb tails keep their representation.
Word normalized(Word w);

// Equality of the presented infinite words.  Exact for const/periodic
// tails via normalization; climb words (context-dependent letters) are
// compared by expansion to `climb_horizon` letters.
bool words_equal(const SlopePair& sp, const Rational& xa, const Word& a, const Rational& xb,
                 const Word& b, std::size_t climb_horizon = 64);

}  // namespace lelek
