#pragma once

#include <string>

#include "lelek/orbit.hpp"

namespace lelek {

struct RenderStyle {
    double stroke_width = 0.6;
    std::string segment_color = "#1d3557";
    std::string band_color = "#e63946";
    std::string background = "#ffffff";
};

struct RenderSpec {
    std::size_t depth = 9;
    std::size_t word_budget = 512;
    unsigned width = 800;
    unsigned height = 600;
    RenderStyle style;
};

// Fan picture: one segment per word of length `depth` (lexicographic,
// r < p, capped at word_budget).  Direction encodes the word's binary
// expansion across a 60 degree sector; length is 1 over the largest
// running product.  Byte-identical output for identical inputs.
std::string render_fan(const SlopePair& sp, const RenderSpec& spec);

// Step plot of the realized orbit values with the visited cylinder
// intervals overlaid at their recorded offsets.
std::string render_orbit(const OrbitProgram& program, const std::vector<Cylinder>& cyls,
                         const RenderSpec& spec);

}  // namespace lelek
