#pragma once

#include <string>

#include "legmosaic/tiles.hpp"

namespace legmosaic {

/// Plain-text picture in grid orientation (not rotated): each tile a 3x3 block
/// of box-drawing glyphs, followed by a legend line. Deterministic bytes.
std::string render_ascii(const Mosaic& m);

/// Rotated front-projection picture: one closed path per traced component
/// (with a data-cusps attribute), plus a gap/over segment pair per crossing
/// so the understrand is visibly broken. Deterministic bytes for a fixed
/// style version.
std::string render_svg(const Mosaic& m);

}  // namespace legmosaic
