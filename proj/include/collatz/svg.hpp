#pragma once

#include <string>

#include "collatz/walk.hpp"

namespace collatz {

struct RenderOptions {
    double stroke_width = 1.0;
    int scale = 10;   // pixels per lattice unit
    int margin = 10;  // pixels around the content box
    bool mark_start = false;  // dot at the walk's origin
};

// SVG 1.1 document with a single path following the walk's ordered points.
// Lattice north maps to decreasing y (screen convention); the viewBox
// exactly bounds the content plus margin. Pure text function: identical
// inputs give identical bytes.
std::string render_svg(const Walk& walk, const RenderOptions& opts = {});

}  // namespace collatz
