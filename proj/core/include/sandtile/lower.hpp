#pragma once

#include "sandtile/tiling.hpp"

namespace sandtile {

// Sends z to the equivalent vector whose last (n-r) entries are zero:
// first block becomes (z_1..z_r) + M * (z_{r+1}..z_n).
IntVec project_first(const StandardRepMatrix& d, const IntVec& z);

// Sends z to the equivalent vector whose first r entries are zero:
// last block becomes (z_{r+1}..z_n) - M^T * (z_1..z_r).
IntVec project_last(const StandardRepMatrix& d, const IntVec& z);

// Alternative integral bases for the row lattice of the full matrix:
// (I M / 0 DhatDhat^T) and (DD^T 0 / -M^T I).
std::pair<IntMat, IntMat> alt_bases(const StandardRepMatrix& d);

enum class LowerKind { Prime, DoublePrime };

struct LowerPiece {
    Basis basis;
    OrientedParallelepiped region;  // translated P1 or P2
};

// T'(D) (r-dimensional, translates of P1) or T''(D) ((n-r)-dimensional,
// translates of P2). The translation lattice is DD^T resp. DhatDhat^T.
struct LowerTile {
    LowerKind kind;
    std::vector<LowerPiece> pieces;  // m(B) pieces per basis, deterministic order
    IntMat translation_lattice;
};

LowerTile build_lower_tile(const StandardRepMatrix& d, const ShiftingVector& w,
                           LowerKind kind);

// Integer representatives read off the tile pieces, zero-padded back to Z^n
// (suffix zeros for Prime, prefix zeros for DoublePrime). m(B)^2 per basis.
std::vector<std::pair<Basis, std::vector<IntVec>>> lower_representatives(
    const StandardRepMatrix& d, const LowerTile& tile, const ShiftingVector& w);

}  // namespace sandtile
