#include "sandtile/svg.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sandtile {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#4c72b0", "#dd8452", "#55a868", "#c44e52",
    "#8172b3", "#937860", "#da8bc3", "#8c8c8c"};

struct Piece2D {
    std::size_t basis_rank;
    IntVec anchor;   // length 2
    IntMat gens;     // 2 x 2
};

void polygon_vertices(const Piece2D& p, std::array<std::pair<Int, Int>, 4>& v) {
    Int ax = p.anchor[0], ay = p.anchor[1];
    Int g0x = p.gens(0, 0), g0y = p.gens(1, 0);
    Int g1x = p.gens(0, 1), g1y = p.gens(1, 1);
    v = {{{ax, ay},
          {ax + g0x, ay + g0y},
          {ax + g0x + g1x, ay + g0y + g1y},
          {ax + g1x, ay + g1y}}};
}

}  // namespace

std::string tile_svg(const StandardRepMatrix& d, TileKind kind,
                     const ShiftingVector* w, bool grid) {
    std::vector<Piece2D> pieces;
    IntMat lattice;
    if (kind == TileKind::Full) {
        if (d.n() != 2) throw dimension_error("full tile rendering needs n = 2");
        auto table = d.enumerate_bases();
        for (std::size_t bi = 0; bi < table.size(); ++bi) {
            auto region = p_full(d, table[bi].basis);
            pieces.push_back({bi, region.anchor(), region.generators()});
        }
        lattice = d.full_matrix();  // translate by integer row combinations
    } else {
        if (w == nullptr) throw validation_error("lower tiles need a shifting vector");
        std::size_t dim = kind == TileKind::Prime ? d.r() : d.n() - d.r();
        if (dim != 2)
            throw dimension_error("tile rendering is only defined in dimension 2");
        auto tile = build_lower_tile(
            d, *w, kind == TileKind::Prime ? LowerKind::Prime : LowerKind::DoublePrime);
        auto table = d.enumerate_bases();
        for (const auto& piece : tile.pieces) {
            std::size_t bi = 0;
            while (!(table[bi].basis == piece.basis)) ++bi;
            pieces.push_back({bi, piece.region.anchor(), piece.region.generators()});
        }
        lattice = tile.translation_lattice;
    }

    std::vector<IntVec> translates = {{Int(0), Int(0)}};
    if (grid) {
        translates.clear();
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 1; ++b) {
                IntVec t(2);
                t[0] = Int(a) * lattice(0, 0) + Int(b) * lattice(1, 0);
                t[1] = Int(a) * lattice(0, 1) + Int(b) * lattice(1, 1);
                translates.push_back(t);
            }
        std::sort(translates.begin(), translates.end());
    }

    Int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool first = true;
    std::array<std::pair<Int, Int>, 4> v;
    for (const auto& t : translates)
        for (const auto& p : pieces) {
            polygon_vertices(p, v);
            for (auto& [x, y] : v) {
                Int px = x + t[0], py = y + t[1];
                if (first || px < min_x) min_x = px;
                if (first || px > max_x) max_x = px;
                if (first || py < min_y) min_y = py;
                if (first || py > max_y) max_y = py;
                first = false;
            }
        }

    const int scale = 32, margin = 16;
    Int width = (max_x - min_x) * scale + 2 * margin;
    Int height = (max_y - min_y) * scale + 2 * margin;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
       << "\">\n";
    // y axis flipped so the math orientation reads upward
    auto emit_x = [&](const Int& x) { return Int((x - min_x) * scale + margin); };
    auto emit_y = [&](const Int& y) { return Int((max_y - y) * scale + margin); };
    for (const auto& t : translates)
        for (const auto& p : pieces) {
            polygon_vertices(p, v);
            os << "  <polygon points=\"";
            for (std::size_t i = 0; i < 4; ++i) {
                if (i) os << " ";
                os << emit_x(v[i].first + t[0]) << "," << emit_y(v[i].second + t[1]);
            }
            os << "\" fill=\"" << kPalette[p.basis_rank % kPalette.size()]
               << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        }
    os << "</svg>\n";
    return os.str();
}

}  // namespace sandtile
