#include "lelek/json_io.hpp"

namespace lelek {

namespace {

Json letters_to_json(const std::vector<Letter>& letters) {
    Json out = Json::array();
    for (Letter l : letters) out.push_back(std::string(1, letter_char(l)));
    return out;
}

std::vector<Letter> letters_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a letter array");
    std::vector<Letter> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        const std::string s = item.get<std::string>();
        const auto l = s.size() == 1 ? letter_from_char(s[0]) : std::nullopt;
        if (!l) throw ParseError("bad letter '" + s + "'");
        out.push_back(*l);
    }
    return out;
}

}  // namespace

Json slope_pair_to_json(const SlopePair& sp) {
    return Json{{"r", rational_str(sp.r)}, {"rho", rational_str(sp.rho)}};
}

SlopePair slope_pair_from_json(const Json& j) {
    return require_nc(parse_rational(j.at("r").get<std::string>()),
                      parse_rational(j.at("rho").get<std::string>()));
}

Json word_to_json(const Word& w) {
    Json tail;
    switch (w.tail.kind) {
        case TailKind::ConstR:
            tail = Json{{"kind", "const-r"}};
            break;
        case TailKind::ConstP:
            tail = Json{{"kind", "const-p"}};
            break;
        case TailKind::Periodic:
            tail = Json{{"kind", "periodic"}, {"data", letters_to_json(w.tail.period)}};
            break;
        case TailKind::Climb:
            tail = Json{{"kind", "climb"}, {"data", w.tail.climb_start}};
            break;
    }
    return Json{{"prefix", letters_to_json(w.prefix)}, {"tail", tail}};
}

Word word_from_json(const Json& j) {
    Word w;
    w.prefix = letters_from_json(j.at("prefix"));
    const Json& tail = j.at("tail");
    const std::string kind = tail.at("kind").get<std::string>();
    if (kind == "const-r") {
        w.tail = TailRule::const_r();
    } else if (kind == "const-p") {
        w.tail = TailRule::const_p();
    } else if (kind == "periodic") {
        w.tail = TailRule::periodic(letters_from_json(tail.at("data")));
        if (w.tail.period.empty()) throw ParseError("periodic tail needs a nonempty block");
    } else if (kind == "climb") {
        w.tail = TailRule::climb(tail.at("data").get<unsigned long>());
    } else {
        throw ParseError("unknown tail kind '" + kind + "'");
    }
    return w;
}

Json fan_point_to_json(const FanPoint& p) {
    return Json{{"x", rational_str(p.x)}, {"word", word_to_json(p.word)}};
}

FanPoint fan_point_from_json(const Json& j) {
    return FanPoint{parse_rational(j.at("x").get<std::string>()),
                    word_from_json(j.at("word"))};
}

Json cylinder_to_json(const Cylinder& c) {
    return Json{{"depth", c.depth()},
                {"u1", Json::array({rational_str(c.u1.lo), rational_str(c.u1.hi)})},
                {"word", letters_to_json(c.word)}};
}

Cylinder cylinder_from_json(const SlopePair& sp, const Json& j) {
    const Json& u1 = j.at("u1");
    Interval base{parse_rational(u1.at(0).get<std::string>()),
                  parse_rational(u1.at(1).get<std::string>())};
    std::vector<Letter> word = letters_from_json(j.at("word"));
    if (j.contains("depth") && j.at("depth").get<std::size_t>() != word.size() + 1)
        throw ParseError("cylinder depth does not match its word length");
    return make_cylinder(sp, std::move(base), std::move(word));
}

std::vector<Cylinder> cylinders_from_json(const SlopePair& sp, const Json& j) {
    const Json& arr = j.is_array() ? j : j.at("cylinders");
    std::vector<Cylinder> out;
    out.reserve(arr.size());
    for (const auto& item : arr) out.push_back(cylinder_from_json(sp, item));
    return out;
}

Json monomial_to_json(const SlopePair& sp, const Monomial& m) {
    return Json{{"m", m.m}, {"n", m.n}, {"value", rational_str(monomial_value(sp, m))}};
}

Json program_to_json(const OrbitProgram& p) {
    Json blocks = Json::array();
    for (const Block& b : p.blocks) {
        if (const auto* bridge = std::get_if<BridgeBlock>(&b))
            blocks.push_back(Json{{"bridge", Json{{"dk", bridge->dk}, {"dl", bridge->dl}}}});
        else
            blocks.push_back(Json{{"traverse", std::get<TraverseBlock>(b).cyl_index}});
    }
    Json visits = Json::array();
    for (const Visit& v : p.visits) visits.push_back(Json::array({v.cyl_index, v.offset}));
    return Json{{"blocks", blocks}, {"visits", visits}};
}

OrbitProgram program_from_json(const SlopePair& sp, const Json& j,
                               const std::vector<Cylinder>& cyls) {
    OrbitProgram out{sp, {}, {}, {}};
    for (const auto& item : j.at("blocks")) {
        if (item.contains("bridge")) {
            const Json& b = item.at("bridge");
            out.blocks.push_back(
                BridgeBlock{b.at("dk").get<unsigned long>(), b.at("dl").get<unsigned long>()});
        } else {
            const std::size_t idx = item.at("traverse").get<std::size_t>();
            if (idx >= cyls.size()) throw ParseError("traverse references a missing cylinder");
            out.blocks.push_back(TraverseBlock{idx, cyls[idx].word});
        }
    }
    for (const auto& item : j.at("visits"))
        out.visits.push_back(Visit{item.at(0).get<std::size_t>(), item.at(1).get<std::size_t>()});
    return out;
}

Json certificate_to_json(const VisitCertificate& cert) {
    Json coords = Json::array();
    for (const Rational& v : cert.coords) coords.push_back(rational_str(v));
    return Json{{"cylinder", cert.cyl_index},
                {"offset", cert.offset},
                {"coords", coords},
                {"pass", cert.pass}};
}

Json certificates_to_json(const std::vector<VisitCertificate>& certs) {
    Json out = Json::array();
    for (const auto& cert : certs) out.push_back(certificate_to_json(cert));
    return out;
}

Json invlim_point_to_json(const InvLimPoint& p) {
    if (is_vertex(p)) return Json{{"kind", "vertex"}};
    return Json{{"kind", "regular"},
                {"x", rational_str(p.x)},
                {"a", word_to_json(p.a)},
                {"c", word_to_json(p.c)}};
}

InvLimPoint invlim_point_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vertex") return InvLimPoint::vertex();
    if (kind != "regular") throw ParseError("unknown invlim point kind '" + kind + "'");
    return InvLimPoint::regular(parse_rational(j.at("x").get<std::string>()),
                                word_from_json(j.at("a")), word_from_json(j.at("c")));
}

Json density_profile_to_json(const SlopePair& sp, const DensityProfile& profile) {
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < profile.witnesses.size(); ++i) {
        if (profile.witnesses[i]) {
            Json w = monomial_to_json(sp, *profile.witnesses[i]);
            w["bin"] = i;
            witnesses.push_back(std::move(w));
        } else {
            witnesses.push_back(Json{{"bin", i}, {"exhausted", true}});
        }
    }
    return Json{{"bins", profile.bins}, {"witnesses", witnesses}};
}

Json endpoint_class_to_json(const EndpointClass& c) {
    const char* name = c.kind == EndpointKind::Endpoint
                           ? "endpoint"
                           : (c.kind == EndpointKind::NotEndpoint ? "not-endpoint" : "unknown");
    Json out{{"class", name}};
    if (c.kind == EndpointKind::Unknown) out["checked_depth"] = c.checked_depth;
    return out;
}

}  // namespace lelek
