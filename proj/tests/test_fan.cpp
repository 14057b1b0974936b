#include <doctest.h>

#include "oracles.hpp"

using namespace lelek;

namespace {

SlopePair half_three() { return require_nc(Rational(1, 2), Rational(3)); }

FanPoint reference_point() {
    // Base 27/64 with word (R, P, R, R, ...); every coordinate stays valid.
    Word w;
    w.prefix = {Letter::R, Letter::P, Letter::R};
    w.tail = TailRule::const_r();
    return FanPoint{Rational(27, 64), w};
}

}  // namespace

TEST_CASE("coordinates of the reference point") {
    const SlopePair sp = half_three();
    const FanPoint p = reference_point();
    CHECK(coordinate(sp, p, 1) == Rational(27, 64));
    CHECK(coordinate(sp, p, 2) == Rational(27, 128));
    CHECK(coordinate(sp, p, 3) == Rational(81, 128));
    CHECK_THROWS_AS(coordinate(sp, p, 0), IndexOutOfRange);
    CHECK_THROWS_AS(coordinate(sp, p, kDepthCap + 1), DepthOverflow);
}

TEST_CASE("point validation") {
    const SlopePair sp = half_three();
    CHECK(validate_point(sp, reference_point(), 4) == std::nullopt);

    Word bad;
    bad.prefix = {Letter::P};
    bad.tail = TailRule::const_r();
    CHECK(validate_point(sp, FanPoint{Rational(27, 64), bad}, 2) == 2);

    CHECK(validate_point(sp, FanPoint{Rational(0), bad}, 16) == std::nullopt);
}

TEST_CASE("shift drops the first coordinate") {
    const SlopePair sp = half_three();
    const FanPoint p = reference_point();
    const FanPoint s = shift(sp, p);
    CHECK(s.x == Rational(27, 128));
    CHECK(s.word.prefix == std::vector<Letter>{Letter::P, Letter::R});

    const FanPoint vertex{Rational(0), Word::const_r()};
    CHECK(is_vertex(shift(sp, vertex)));

    // Conjugacy: coordinate(shift(p), i) = coordinate(p, i+1).
    for (std::size_t i = 1; i <= 12; ++i)
        CHECK(coordinate(sp, s, i) == coordinate(sp, p, i + 1));
}

TEST_CASE("shift keeps membership") {
    const SlopePair sp = half_three();
    oracle::Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational x = oracle::random_rational(rng, 200, Rational(1, 100), Rational(99, 100));
        Word w;
        w.prefix = oracle::random_valid_prefix(rng, sp, x, 6);
        w.tail = TailRule::const_r();
        const FanPoint p{x, w};
        REQUIRE(validate_point(sp, p, 10) == std::nullopt);
        const FanPoint s = shift(sp, p);
        CHECK(validate_point(sp, s, 9) == std::nullopt);
        for (std::size_t i = 1; i <= 9; ++i)
            CHECK(coordinate(sp, s, i) == coordinate(sp, p, i + 1));
    }
}

TEST_CASE("endpoint classification reference verdicts") {
    const SlopePair sp = half_three();
    const Rational tol(1, 1024);

    CHECK(classify_endpoint(sp, FanPoint{Rational(1), Word::const_r()}, 8, tol).kind ==
          EndpointKind::Endpoint);
    CHECK(classify_endpoint(sp, FanPoint{Rational(0), Word::const_r()}, 8, tol).kind ==
          EndpointKind::NotEndpoint);
    CHECK(classify_endpoint(sp, reference_point(), 8, tol).kind == EndpointKind::NotEndpoint);

    // Coordinate hits 1 exactly: base 1/3, first letter rho.
    Word up;
    up.prefix = {Letter::P};
    up.tail = TailRule::const_r();
    CHECK(classify_endpoint(sp, FanPoint{Rational(1, 3), up}, 8, tol).kind ==
          EndpointKind::Endpoint);

    // Const-p tails cannot be settled by inspection.
    CHECK(classify_endpoint(sp, FanPoint{Rational(1, 5), Word::const_p()}, 64, tol).kind ==
          EndpointKind::Unknown);

    // Contracting periodic word: exact sup below 1.
    Word per;
    per.tail = TailRule::periodic({Letter::P, Letter::R, Letter::R});
    const EndpointClass pc = classify_endpoint(sp, FanPoint{Rational(1, 5), per}, 8, tol);
    CHECK(pc.kind == EndpointKind::NotEndpoint);
}

TEST_CASE("classification agrees with the brute-force sup scan") {
    const SlopePair sp = half_three();
    oracle::Rng rng(23);
    const Rational tol(1, 1024);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational x = oracle::random_rational(rng, 300, Rational(1, 50), Rational(49, 50));
        Word w;
        w.prefix = oracle::random_valid_prefix(rng, sp, x, 1 + rng() % 8);
        switch (rng() % 3) {
            case 0:
                w.tail = TailRule::const_r();
                break;
            case 1:
                w.tail = TailRule::periodic({Letter::P, Letter::R, Letter::R});
                break;
            default:
                w.tail = TailRule::periodic({Letter::R, Letter::R, Letter::P});
                break;
        }
        const FanPoint p{x, w};
        if (validate_point(sp, p, 64) != std::nullopt) continue;
        const EndpointClass cls = classify_endpoint(sp, p, 64, tol);
        const oracle::SupScan sup = oracle::sup_scan(sp, p, 512);
        if (cls.kind == EndpointKind::NotEndpoint) CHECK(sup.max_value < 1);
        if (cls.kind == EndpointKind::Endpoint) CHECK(sup.hit_one);
    }
}

TEST_CASE("classification verdicts are stable as depth grows") {
    const SlopePair sp = half_three();
    const Rational tol(1, 1024);
    const FanPoint points[] = {
        reference_point(),
        FanPoint{Rational(1, 5), Word::const_p()},
        FanPoint{Rational(27, 64), Word{{}, TailRule::climb(1)}},
    };
    for (const FanPoint& p : points) {
        const EndpointClass shallow = classify_endpoint(sp, p, 16, tol);
        const EndpointClass deep = classify_endpoint(sp, p, 256, tol);
        if (shallow.kind != EndpointKind::Unknown) CHECK(shallow.kind == deep.kind);
    }
}

TEST_CASE("make_endpoint climbs to one") {
    const SlopePair sp = half_three();
    const FanPoint e = make_endpoint(sp, {1, 1, Rational(2, 5), Rational(1, 2)});
    CHECK(e.x == Rational(27, 64));
    CHECK(e.word.tail.kind == TailKind::Climb);
    CHECK(classify_endpoint(sp, e, 8, Rational(0)).kind == EndpointKind::Endpoint);
    CHECK(validate_point(sp, e, 512) == std::nullopt);

    // The running values really enter every scheduled window.
    const std::vector<Rational> values = running_values(sp, e.x, e.word, 400);
    Rational target(1, 2);
    unsigned long hits = 0;
    Rational best(0);
    for (const Rational& v : values) {
        if (v > best) best = v;
        if (best > target && hits < 5) {
            ++hits;
            target = Rational(1) - pow2(-static_cast<long>(hits + 1));
        }
    }
    CHECK(hits >= 4);

    // A seed already adjacent to 1 still yields an endpoint; the base sits
    // at the continued-fraction convergent 301994/190537 of log2(3), so the
    // search needs room.
    const FanPoint near_one = make_endpoint(
        sp, {1, 1, Rational(1) - Rational(1, 1000000), Rational(1)}, SearchOptions{350000, true});
    CHECK(classify_endpoint(sp, near_one, 8, Rational(0)).kind == EndpointKind::Endpoint);
    CHECK(validate_point(sp, near_one, 128) == std::nullopt);

    CHECK_THROWS_AS(make_endpoint(sp, {1, 1, Rational(1), Rational(1)}), InvalidConstraint);
}

TEST_CASE("monomial coordinates never hit 1") {
    const SlopePair sp = half_three();
    // Coordinates of monomial-based points are lattice values; distinctness
    // from 1 is the m = n = 0 case of lattice injectivity.
    for (unsigned long m = 0; m <= 30; ++m)
        for (unsigned long n = 0; n <= 30; ++n)
            if (m + n > 0) CHECK(monomial_value(sp, Monomial{m, n}) != 1);
}

TEST_CASE("metric on truncated coordinates") {
    const SlopePair sp = half_three();
    const FanPoint p = reference_point();
    CHECK(metric_d(sp, p, p, 6).value == 0);

    const FanPoint vertex{Rational(0), Word::const_r()};
    const FanPoint one{Rational(1), Word::const_r()};
    const MetricValue d = metric_d(sp, vertex, one, 1);
    CHECK(d.value == Rational(1, 2));
    CHECK(d.tail_bound == Rational(1, 2));

    oracle::Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational x = oracle::random_rational(rng, 100, Rational(1, 10), Rational(9, 10));
        const FanPoint q{x, Word::const_r()};
        const MetricValue dq = metric_d(sp, p, q, 8);
        CHECK(dq.value <= Rational(1, 2));
        CHECK(metric_d(sp, q, p, 8).value == dq.value);
    }
}

TEST_CASE("arc sampling") {
    const SlopePair sp = half_three();

    const auto flat = arc_sample(sp, Word::const_r(), 3, 2);
    REQUIRE(flat.size() == 2);
    CHECK(flat[0] == std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
    CHECK(flat[1] == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 4)});

    const auto steep = arc_sample(sp, Word::const_p(), 3, 2);
    CHECK(steep[1][0] == Rational(1, 9));  // t_max = 1 / rho^2

    Word mixed;
    mixed.prefix = {Letter::P};
    mixed.tail = TailRule::const_r();
    const auto bent = arc_sample(sp, mixed, 4, 3);
    CHECK(bent[2][0] == Rational(1, 3));  // running max is rho

    for (const auto& row : bent)
        for (const Rational& v : row) {
            CHECK(v >= 0);
            CHECK(v <= 1);
        }

    CHECK_THROWS_AS(arc_sample(sp, Word{{}, TailRule::climb(1)}, 3, 2), WordNotUsable);
    CHECK_THROWS_AS(arc_sample(sp, Word::const_r(), 3, 1), InvalidConstraint);
}

TEST_CASE("word normalization and equality") {
    const SlopePair sp = half_three();
    const Rational x(1, 5);

    Word a;
    a.prefix = {Letter::P};
    a.tail = TailRule::const_p();
    CHECK(words_equal(sp, x, a, x, Word::const_p()));

    Word rotated;
    rotated.prefix = {Letter::R};
    rotated.tail = TailRule::periodic({Letter::P, Letter::R});
    Word straight;
    straight.tail = TailRule::periodic({Letter::R, Letter::P});
    CHECK(words_equal(sp, x, rotated, x, straight));

    Word doubled;
    doubled.tail = TailRule::periodic({Letter::R, Letter::P, Letter::R, Letter::P});
    CHECK(words_equal(sp, x, doubled, x, straight));

    Word single;
    single.tail = TailRule::periodic({Letter::R});
    CHECK(words_equal(sp, x, single, x, Word::const_r()));

    CHECK_FALSE(words_equal(sp, x, straight, x, Word::const_r()));
}
