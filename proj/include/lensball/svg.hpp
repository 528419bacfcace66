// SVG drawings of diagrams and knots with bands.
//
// Layout: each connected piece gets a barycentric embedding of its node-face
// incidence graph, with the nodes of its longest face on a circle. Strands
// run straight through crossings as cubic curves, under-strands break at the
// crossing, and bands are thick coloured chords between their feet. The output
// depends only on the input.
#pragma once

#include <string>

#include "lensball/bands.hpp"

namespace lensball {

std::string svg_export(const PDCode& d);
std::string svg_export(const DiagramWithBands& s);

/// Colour used for a band label: pink, blue, red and friends map to
/// themselves, other labels to a fixed palette entry.
std::string band_colour(const std::string& label);

}  // namespace lensball
