#pragma once

#include <string>

#include "sandtile/lower.hpp"

namespace sandtile {

enum class TileKind { Full, Prime, DoublePrime };

// Deterministic SVG for a 2-dimensional tile: one polygon per piece, fill
// color keyed by basis rank, optional 3x3 grid of lattice translates.
// Throws dimension_error unless the rendered dimension is 2.
std::string tile_svg(const StandardRepMatrix& d, TileKind kind,
                     const ShiftingVector* w, bool grid);

}  // namespace sandtile
