#include "lelek/orbit.hpp"

#include <algorithm>

namespace lelek {

namespace {

unsigned long count_letters(const std::vector<Letter>& w, Letter which) {
    return static_cast<unsigned long>(std::count(w.begin(), w.end(), which));
}

std::size_t block_letters(const Block& b) {
    if (const auto* bridge = std::get_if<BridgeBlock>(&b)) return bridge->dk + bridge->dl;
    return std::get<TraverseBlock>(b).letters.size();
}

}  // namespace

OrbitProgram synthesize(const SlopePair& sp, const std::vector<Cylinder>& cyls,
                        const SearchOptions& opts) {
    if (cyls.empty()) throw InvalidCylinder("need at least one cylinder");
    OrbitProgram program{sp, {}, {}, {}};

    unsigned long k = 0, l = 0;  // exponents reached so far; (0,0) = virtual start
    std::size_t letters_emitted = 0;
    for (std::size_t i = 0; i < cyls.size(); ++i) {
        SearchConstraint entry;
        entry.k_floor = k + 1;
        entry.l_floor = l + 1;
        entry.lo = cyls[i].u1.lo;
        entry.hi = cyls[i].u1.hi;
        SearchOptions step = opts;
        step.budget = std::max(entry.k_floor, entry.l_floor) + opts.budget;
        const Monomial entry_mono = find_monomial(sp, entry, step);

        program.blocks.push_back(BridgeBlock{entry_mono.m - k, entry_mono.n - l});
        letters_emitted += (entry_mono.m - k) + (entry_mono.n - l);
        // The bridge's final letter produces the entry coordinate, which
        // the traverse owns; the visit starts there.
        program.visits.push_back(Visit{i, letters_emitted - 1});
        program.trace.emplace_back(entry_mono.m, entry_mono.n);

        program.blocks.push_back(TraverseBlock{i, cyls[i].word});
        letters_emitted += cyls[i].word.size();
        k = entry_mono.m + count_letters(cyls[i].word, Letter::R);
        l = entry_mono.n + count_letters(cyls[i].word, Letter::P);
    }
    return program;
}

std::size_t realized_length(const OrbitProgram& p) {
    std::size_t total = 0;
    for (const Block& b : p.blocks) total += block_letters(b);
    return total;
}

Realization realize(const OrbitProgram& p, std::size_t length) {
    if (length > realized_length(p)) throw IndexOutOfRange("length beyond realized prefix");
    Realization out;
    out.values.reserve(length);
    Rational v(1);  // virtual predecessor of the first coordinate
    for (const Block& b : p.blocks) {
        if (out.values.size() == length) break;
        auto emit = [&](Letter letter) {
            if (out.values.size() == length) return;
            if (!out.values.empty()) out.word.push_back(letter);
            v *= p.slopes.slope(letter);
            out.values.push_back(v);
        };
        if (const auto* bridge = std::get_if<BridgeBlock>(&b)) {
            for (unsigned long j = 0; j < bridge->dk; ++j) emit(Letter::R);
            for (unsigned long j = 0; j < bridge->dl; ++j) emit(Letter::P);
        } else {
            for (Letter letter : std::get<TraverseBlock>(b).letters) emit(letter);
        }
    }
    return out;
}

FanPoint orbit_point(const OrbitProgram& p) {
    const Realization full = realize(p, realized_length(p));
    if (full.values.empty()) throw InvalidCylinder("empty program");
    Word w;
    w.prefix = full.word;
    w.tail = TailRule::const_r();
    return FanPoint{full.values.front(), std::move(w)};
}

std::vector<VisitCertificate> verify(const OrbitProgram& p, const std::vector<Cylinder>& cyls) {
    const Realization full = realize(p, realized_length(p));
    std::vector<VisitCertificate> out;
    out.reserve(p.visits.size());
    for (const Visit& visit : p.visits) {
        if (visit.cyl_index >= cyls.size())
            throw IndexOutOfRange("visit references a missing cylinder");
        const Cylinder& c = cyls[visit.cyl_index];
        VisitCertificate cert;
        cert.cyl_index = visit.cyl_index;
        cert.offset = visit.offset;
        cert.pass = visit.offset + c.depth() <= full.values.size();
        Interval u = c.u1;
        for (std::size_t j = 0; j < c.depth() && cert.pass; ++j) {
            const Rational& coord = full.values[visit.offset + j];
            cert.coords.push_back(coord);
            if (!u.contains(coord)) cert.pass = false;
            if (j + 1 < c.depth()) {
                u.lo *= p.slopes.slope(c.word[j]);
                u.hi *= p.slopes.slope(c.word[j]);
            }
        }
        out.push_back(std::move(cert));
    }
    return out;
}

TransitivityWitness witness_transitivity(const SlopePair& sp, const Cylinder& u,
                                         const Cylinder& v, const SearchOptions& opts) {
    SearchConstraint enter_u;
    enter_u.k_floor = 1;
    enter_u.l_floor = 1;
    enter_u.lo = u.u1.lo;
    enter_u.hi = u.u1.hi;
    const Monomial at_u = find_monomial(sp, enter_u, opts);

    const unsigned long k1 = at_u.m + count_letters(u.word, Letter::R);
    const unsigned long l1 = at_u.n + count_letters(u.word, Letter::P);

    SearchConstraint enter_v;
    enter_v.k_floor = k1 + 1;
    enter_v.l_floor = l1 + 1;
    enter_v.lo = v.u1.lo;
    enter_v.hi = v.u1.hi;
    SearchOptions step = opts;
    step.budget = std::max(enter_v.k_floor, enter_v.l_floor) + opts.budget;
    const Monomial at_v = find_monomial(sp, enter_v, step);

    const unsigned long dk = at_v.m - k1;
    const unsigned long dl = at_v.n - l1;

    Word w;
    w.prefix = u.word;
    w.prefix.insert(w.prefix.end(), dk, Letter::R);
    w.prefix.insert(w.prefix.end(), dl, Letter::P);
    w.prefix.insert(w.prefix.end(), v.word.begin(), v.word.end());
    w.tail = TailRule::const_r();

    TransitivityWitness out;
    out.n = (u.depth() - 1) + dk + dl;
    out.point = FanPoint{monomial_value(sp, at_u), std::move(w)};
    return out;
}

NonInjectivityPair non_injectivity_witness(const SlopePair& sp) {
    const Rational t = Rational(1) / (2 * sp.rho);
    Word w = Word::const_r();

    NonInjectivityPair out;
    out.q = FanPoint{sp.r * sp.rho * t, w};
    out.p1 = FanPoint{sp.r * t, word_push_front(Letter::P, w)};
    out.p2 = FanPoint{sp.rho * t, word_push_front(Letter::R, w)};
    return out;
}

}  // namespace lelek
