// Acceptance suite: one check per release criterion, every assertion in
// exact arithmetic against independent brute-force references.  Prints one
// PASS/FAIL line per criterion and exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lelek/invlim.hpp"
#include "lelek/orbit.hpp"
#include "lelek/render.hpp"
#include "oracles.hpp"

using namespace lelek;

namespace {

struct Criterion {
    int number;
    std::string label;
    std::function<bool(std::string&)> run;
};

SlopePair half_three() { return require_nc(Rational(1, 2), Rational(3)); }

bool criterion_nc_gate(std::string& detail) {
    bool ok = true;

    ok &= validate_nc(Rational(1, 2), Rational(3)).accepted();

    const NcResult a = validate_nc(Rational(1, 2), Rational(2));
    ok &= !a.accepted() && a.rejection->witness == std::make_pair(1L, -1L);
    const NcResult b = validate_nc(Rational(1, 4), Rational(2));
    ok &= !b.accepted() && b.rejection->witness == std::make_pair(1L, -2L);

    oracle::Rng rng(101);
    int scanned = 0;
    int trials = 0;
    while (scanned < 50 && trials < 400) {
        ++trials;
        Rational r, rho;
        if (scanned % 5 == 4) {
            // Constructed dependent pair (a/b)^q vs (b/a)^p with small p, q.
            const unsigned long aa = 2 + rng() % 5;
            const unsigned long bb = aa + 1 + rng() % 4;
            const long p = 1 + static_cast<long>(rng() % 3);
            const long q = 1 + static_cast<long>(rng() % 3);
            r = rational_pow(Rational(aa, bb), q);
            rho = rational_pow(Rational(bb, aa), p);
        } else {
            r = oracle::random_rational(rng, 60, Rational(0), Rational(1));
            rho = Rational(1) + oracle::random_rational(rng, 60, Rational(0), Rational(6));
        }
        const NcResult res = validate_nc(r, rho);
        if (res.rejection && res.rejection->clause != NcClause::Dependent) continue;
        const auto witness = oracle::nc_witness_scan(r, rho, 20);
        if (res.accepted()) {
            ok &= !witness.has_value();
        } else {
            ok &= witness.has_value();
            const auto [k, l] = *res.rejection->witness;
            ok &= rational_pow(r, k) == rational_pow(rho, l);
        }
        ++scanned;
    }
    ok &= scanned == 50;
    detail = std::to_string(scanned) + " random pairs cross-checked";
    return ok;
}

bool criterion_density(std::string& detail) {
    const SlopePair sp = half_three();
    bool ok = true;
    for (const unsigned long floor : {0ul, 10ul}) {
        const DensityProfile profile = density_profile(sp, 100, floor, floor);
        for (unsigned long i = 0; i < 100; ++i) {
            if (!profile.witnesses[i]) {
                ok = false;
                continue;
            }
            const Monomial w = *profile.witnesses[i];
            ok &= w.m >= floor && w.n >= floor;
            const Rational v = monomial_value(sp, w);
            ok &= Rational(i, 100) < v && v < Rational(i + 1, 100);
        }
    }
    detail = "200 bins filled and verified";
    return ok;
}

bool criterion_search_oracle(std::string& detail) {
    const SlopePair sp = half_three();
    oracle::Rng rng(103);
    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SearchConstraint c;
        c.k_floor = rng() % 9;
        c.l_floor = rng() % 9;
        c.lo = oracle::random_rational(rng, 911, Rational(1, 1000), Rational(9, 10));
        c.hi = c.lo + oracle::random_rational(rng, 911, Rational(1, 1000), Rational(1, 12));
        c.hi.canonicalize();
        const auto expected = oracle::find_monomial_scan(sp, c, 64);
        std::optional<Monomial> got;
        try {
            got = find_monomial(sp, c, SearchOptions{64, true});
        } catch (const SearchExhausted&) {
        }
        if (got != expected) ++mismatches;
    }
    detail = "200 targets, " + std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
}

// Shared corpus for criteria 4 and 5: random valid points with coordinates
// inside (0,1) and the cylinders the covering construction builds on them.
std::vector<Cylinder> covering_corpus(const SlopePair& sp, std::size_t count, bool& ok) {
    oracle::Rng rng(107);
    const Rational epses[] = {Rational(1, 8), Rational(1, 32), Rational(1, 128)};
    std::vector<Cylinder> cyls;
    while (cyls.size() < count) {
        const Rational x = oracle::random_rational(rng, 500, Rational(1, 20), Rational(19, 20));
        Word w;
        w.prefix = oracle::random_valid_prefix(rng, sp, x, 10);
        w.tail = TailRule::const_r();
        const FanPoint z{x, w};
        const Rational& eps = epses[cyls.size() % 3];
        const Cylinder c = build_cylinder(sp, z, eps, 1);

        ok &= cylinder_contains(sp, c, z);
        ok &= cylinder_diameter(sp, c) < eps;
        const std::vector<Letter> letters = expand_letters(sp, z.x, z.word, c.depth() - 1);
        ok &= std::equal(c.word.begin(), c.word.end(), letters.begin());
        Interval u = c.u1;
        for (std::size_t i = 0; i + 1 < c.depth(); ++i) {
            const Interval next = interval_at(sp, c, i + 2);
            ok &= next.lo == u.lo * sp.slope(c.word[i]) && next.hi == u.hi * sp.slope(c.word[i]);
            ok &= sgn(next.lo) > 0 && next.hi < 1;
            u = next;
        }
        cyls.push_back(c);
    }
    return cyls;
}

bool criterion_cylinder_lemma(std::string& detail) {
    const SlopePair sp = half_three();
    bool ok = true;
    const std::vector<Cylinder> cyls = covering_corpus(sp, 100, ok);
    detail = std::to_string(cyls.size()) + " cylinders checked";
    return ok;
}

bool criterion_dense_orbit(std::string& detail) {
    const SlopePair sp = half_three();
    bool ok = true;
    std::vector<Cylinder> cyls = covering_corpus(sp, 25, ok);

    const OrbitProgram program = synthesize(sp, cyls, SearchOptions{2048, true});
    const auto certs = verify(program, cyls);
    ok &= certs.size() == cyls.size();
    for (const auto& cert : certs) ok &= cert.pass;

    for (std::size_t i = 1; i < program.trace.size(); ++i) {
        ok &= program.trace[i].first > program.trace[i - 1].first;
        ok &= program.trace[i].second > program.trace[i - 1].second;
    }

    const Realization full = realize(program, realized_length(program));
    for (const Rational& v : full.values) ok &= sgn(v) > 0 && v < 1;

    detail = std::to_string(certs.size()) + " visits over " +
             std::to_string(full.values.size()) + " coordinates";
    return ok;
}

bool criterion_transitivity(std::string& detail) {
    const SlopePair sp = half_three();
    oracle::Rng rng(109);
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        const Cylinder u = oracle::random_cylinder(rng, sp);
        const Cylinder v = oracle::random_cylinder(rng, sp);
        const TransitivityWitness w = witness_transitivity(sp, u, v, SearchOptions{4096, true});
        ok &= cylinder_contains(sp, u, w.point);
        FanPoint s = w.point;
        for (std::size_t i = 0; i < w.n; ++i) s = shift(sp, s);
        ok &= cylinder_contains(sp, v, s);
    }
    detail = "50 cylinder pairs";
    return ok;
}

bool criterion_non_injectivity(std::string& detail) {
    oracle::Rng rng(113);
    bool ok = true;
    int done = 0;
    while (done < 10) {
        const Rational r = oracle::random_rational(rng, 40, Rational(0), Rational(1));
        const Rational rho =
            Rational(1) + oracle::random_rational(rng, 40, Rational(0), Rational(5));
        const NcResult res = validate_nc(r, rho);
        if (!res.accepted()) continue;
        const SlopePair& sp = *res.pair;
        const NonInjectivityPair w = non_injectivity_witness(sp);
        ok &= !fan_points_equal(sp, w.p1, w.p2);
        ok &= fan_points_equal(sp, shift(sp, w.p1), w.q);
        ok &= fan_points_equal(sp, shift(sp, w.p2), w.q);
        ok &= validate_point(sp, w.p1, 32) == std::nullopt;
        ok &= validate_point(sp, w.p2, 32) == std::nullopt;
        ++done;
    }
    detail = "10 parameter pairs";
    return ok;
}

// Valid random inverse-limit point over decidable tails.
InvLimPoint random_invlim_point(oracle::Rng& rng, const SlopePair& sp) {
    for (;;) {
        const Rational x = oracle::random_rational(rng, 400, Rational(1, 50), Rational(49, 50));
        Word a;
        a.prefix = oracle::random_valid_prefix(rng, sp, x, rng() % 5);
        switch (rng() % 3) {
            case 0:
                a.tail = TailRule::const_r();
                break;
            case 1:
                a.tail = TailRule::periodic({Letter::P, Letter::R, Letter::R});
                break;
            default:
                a.tail = TailRule::climb(1);
                break;
        }
        Word c;
        if (rng() % 2 == 0)
            c = Word::const_p();
        else
            c.tail = TailRule::periodic({Letter::P, Letter::P, Letter::R});
        if (rng() % 3 == 0 && x < Rational(1, 4))
            c.prefix = {Letter::P, (rng() % 2 == 0) ? Letter::R : Letter::P};
        const InvLimPoint p = InvLimPoint::regular(x, a, c);
        if (validate_invlim(sp, p, 32).status == PairStatus::Valid) return p;
    }
}

bool criterion_homeomorphism(std::string& detail) {
    const SlopePair sp = half_three();
    oracle::Rng rng(127);
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const InvLimPoint p =
            (trial % 100 == 0) ? InvLimPoint::vertex() : random_invlim_point(rng, sp);
        ok &= invlim_points_equal(sp, shift_backward(sp, shift_forward(sp, p)), p);
        ok &= invlim_points_equal(sp, shift_forward(sp, shift_backward(sp, p)), p);

        const InvLimPoint s = shift_forward(sp, p);
        for (std::size_t k = 1; k <= 16; ++k)
            ok &= k_coordinate(sp, s, k, 16) == k_coordinate(sp, p, k + 1, 16);
    }
    detail = "1000 points, conjugacy to level 16";
    return ok;
}

bool criterion_endpoint_density(std::string& detail) {
    const SlopePair sp = half_three();
    oracle::Rng rng(131);
    bool ok = true;
    const Rational epses[] = {Rational(1, 16), Rational(1, 64)};
    for (int trial = 0; trial < 50; ++trial) {
        const InvLimPoint t =
            (trial % 10 == 0) ? InvLimPoint::vertex() : random_invlim_point(rng, sp);
        for (const Rational& eps : epses) {
            const InvLimPoint out = endpoint_near(sp, t, eps, SearchOptions{4096, true});
            ok &= classify_endpoint_invlim(sp, out, 32, Rational(0)).kind ==
                  EndpointKind::Endpoint;
            const MetricValue d = metric_D(sp, t, out, 24);
            ok &= d.value + pow2(-24) < eps;
        }
    }
    detail = "50 points at two radii";
    return ok;
}

bool criterion_classification(std::string& detail) {
    const SlopePair sp = half_three();
    oracle::Rng rng(137);
    bool ok = true;
    int unknown = 0;
    int endpoints = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const Rational x = oracle::random_rational(rng, 400, Rational(1, 50), Rational(49, 50));
        Word w;
        w.prefix = oracle::random_valid_prefix(rng, sp, x, rng() % 10);
        switch (rng() % 4) {
            case 0:
                w.tail = TailRule::const_r();
                break;
            case 1:
                w.tail = TailRule::periodic({Letter::P, Letter::R, Letter::R});
                break;
            case 2:
                w.tail = TailRule::periodic({Letter::R, Letter::P, Letter::R, Letter::R});
                break;
            default:
                w.tail = TailRule::climb(1);
                break;
        }
        const FanPoint p{x, w};
        const EndpointClass cls = classify_endpoint(sp, p, 2048, Rational(1, 4096));
        const oracle::SupScan sup = oracle::sup_scan(sp, p, 2048);

        switch (cls.kind) {
            case EndpointKind::NotEndpoint:
                ok &= sup.max_value < 1;
                break;
            case EndpointKind::Endpoint: {
                ++endpoints;
                if (w.tail.kind == TailKind::Climb) {
                    // The scan must have pushed past several climb windows.
                    ok &= sup.max_value > Rational(15, 16);
                } else {
                    ok &= sup.hit_one;
                }
                break;
            }
            case EndpointKind::Unknown:
                ++unknown;
                break;
        }
    }
    detail = std::to_string(endpoints) + " endpoints, unknown rate " +
             std::to_string(unknown) + "/500";
    return ok;
}

bool criterion_rendering(std::string& detail) {
    const SlopePair sp = half_three();
    bool ok = true;

    RenderSpec spec;
    spec.depth = 9;
    spec.word_budget = 512;
    const std::string first = render_fan(sp, spec);
    ok &= first == render_fan(sp, spec);
    ok &= first == render_fan(sp, spec);

    std::size_t segments = 0;
    for (std::size_t pos = first.find("<line "); pos != std::string::npos;
         pos = first.find("<line ", pos + 1))
        ++segments;
    ok &= segments == 512;

    const Cylinder c = make_cylinder(sp, Interval{Rational(2, 5), Rational(11, 25)},
                                     {Letter::R, Letter::P});
    const OrbitProgram program = synthesize(sp, {c, c});
    const std::string orbit_svg = render_orbit(program, {c, c}, spec);
    for (const Visit& v : program.visits)
        ok &= orbit_svg.find("data-offset=\"" + std::to_string(v.offset) + "\"") !=
              std::string::npos;

    detail = "512 segments, bands at recorded offsets";
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "never-connect gate with exact witnesses", criterion_nc_gate},
        {2, "lattice density fills 100 bins at floors (0,0) and (10,10)", criterion_density},
        {3, "search agrees with the exhaustive oracle on 200 targets", criterion_search_oracle},
        {4, "covering cylinders: membership, coherence, diameter", criterion_cylinder_lemma},
        {5, "dense-orbit synthesis verifies over 25 cylinders", criterion_dense_orbit},
        {6, "transitivity witnesses for 50 cylinder pairs", criterion_transitivity},
        {7, "shift non-injectivity on 10 parameter pairs", criterion_non_injectivity},
        {8, "inverse-limit round trips and conjugacy on 1000 points", criterion_homeomorphism},
        {9, "endpoints within eps of 50 inverse-limit points", criterion_endpoint_density},
        {10, "endpoint classification vs depth-2048 sup scan on 500 points",
         criterion_classification},
        {11, "deterministic rendering with certificate-aligned bands", criterion_rendering},
    };

    int failures = 0;
    for (const Criterion& crit : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = crit.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s (%s, %.2fs)\n", pass ? "PASS" : "FAIL", crit.number,
                    crit.label.c_str(), detail.c_str(), seconds);
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
