#include "lelek/render.hpp"

#include <cmath>
#include <cstdio>

namespace lelek {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void check_spec(const RenderSpec& spec) {
    if (spec.width == 0 || spec.height == 0)
        throw InvalidRenderSpec("canvas dimensions must be positive");
    if (spec.depth == 0) throw InvalidRenderSpec("depth must be >= 1");
    if (spec.word_budget == 0) throw InvalidRenderSpec("word_budget must be >= 1");
}

std::string svg_open(const RenderSpec& spec) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"" + spec.style.background + "\"/>\n";
    return out;
}

}  // namespace

std::string render_fan(const SlopePair& sp, const RenderSpec& spec) {
    check_spec(spec);
    if (spec.depth > 62) throw BudgetExceeded("word enumeration beyond 2^62");
    const unsigned long long total =
        spec.depth >= 62 ? ~0ull : (1ull << spec.depth);
    const unsigned long long count =
        std::min<unsigned long long>(total, spec.word_budget);

    const double pad = 12.0;
    const double apex_x = spec.width / 2.0;
    const double apex_y = pad;
    const double reach = spec.height - 2.0 * pad;
    const double sector = 60.0 * M_PI / 180.0;

    std::string out = svg_open(spec);
    out += "<g stroke=\"" + spec.style.segment_color + "\" stroke-width=\"" +
           fmt(spec.style.stroke_width) + "\" stroke-linecap=\"round\">\n";
    for (unsigned long long w = 0; w < count; ++w) {
        // Bit i (most significant first) encodes letter i: 0 = r, 1 = p.
        Rational prod(1);
        Rational max_prod(1);
        double frac = 0.0;
        for (std::size_t i = 0; i < spec.depth; ++i) {
            const bool is_p = (w >> (spec.depth - 1 - i)) & 1ull;
            prod *= is_p ? sp.rho : sp.r;
            if (prod > max_prod) max_prod = prod;
            if (is_p) frac += std::ldexp(1.0, -static_cast<int>(i + 1));
        }
        const double t_max = 1.0 / max_prod.get_d();
        const double angle = (frac - 0.5) * sector;  // centered on straight down
        const double x2 = apex_x + reach * t_max * std::sin(angle);
        const double y2 = apex_y + reach * t_max * std::cos(angle);
        out += "<line x1=\"" + fmt(apex_x) + "\" y1=\"" + fmt(apex_y) + "\" x2=\"" + fmt(x2) +
               "\" y2=\"" + fmt(y2) + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_orbit(const OrbitProgram& program, const std::vector<Cylinder>& cyls,
                         const RenderSpec& spec) {
    check_spec(spec);
    const Realization full = realize(program, realized_length(program));
    const std::size_t len = full.values.size();
    if (len == 0) throw InvalidRenderSpec("empty program");

    const double pad = 24.0;
    const double plot_w = spec.width - 2.0 * pad;
    const double plot_h = spec.height - 2.0 * pad;
    const double dx = len > 1 ? plot_w / static_cast<double>(len - 1) : 0.0;
    auto px = [&](std::size_t idx) { return pad + dx * static_cast<double>(idx); };
    auto py = [&](double v) { return pad + plot_h * (1.0 - v); };

    std::string out = svg_open(spec);

    // Interval bands at each recorded visit, one group per certificate.
    for (const Visit& visit : program.visits) {
        const Cylinder& c = cyls.at(visit.cyl_index);
        out += "<g class=\"band\" data-cylinder=\"" + std::to_string(visit.cyl_index) +
               "\" data-offset=\"" + std::to_string(visit.offset) + "\" fill=\"" +
               spec.style.band_color + "\" fill-opacity=\"0.25\">\n";
        Interval u = c.u1;
        for (std::size_t j = 0; j < c.depth(); ++j) {
            const std::size_t idx = visit.offset + j;
            if (idx >= len) break;
            const double x0 = px(idx) - dx * 0.35;
            const double y_top = py(u.hi.get_d());
            const double h = py(u.lo.get_d()) - y_top;
            out += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y_top) + "\" width=\"" +
                   fmt(dx * 0.7) + "\" height=\"" + fmt(h) + "\"/>\n";
            if (j + 1 < c.depth()) {
                u.lo *= program.slopes.slope(c.word[j]);
                u.hi *= program.slopes.slope(c.word[j]);
            }
        }
        out += "</g>\n";
    }

    out += "<polyline fill=\"none\" stroke=\"" + spec.style.segment_color +
           "\" stroke-width=\"" + fmt(spec.style.stroke_width) + "\" points=\"";
    for (std::size_t i = 0; i < len; ++i) {
        if (i) out += " ";
        out += fmt(px(i)) + "," + fmt(py(full.values[i].get_d()));
    }
    out += "\"/>\n";
    for (std::size_t i = 0; i < len; ++i) {
        out += "<circle cx=\"" + fmt(px(i)) + "\" cy=\"" + fmt(py(full.values[i].get_d())) +
               "\" r=\"1.6\" fill=\"" + spec.style.segment_color + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace lelek
