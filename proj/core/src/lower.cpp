#include "sandtile/lower.hpp"

#include <algorithm>

namespace sandtile {

IntVec project_first(const StandardRepMatrix& d, const IntVec& z) {
    const std::size_t r = d.r(), n = d.n();
    if (z.size() != n) throw dimension_error("project_first: vector length mismatch");
    IntVec out(n, Int(0));
    for (std::size_t i = 0; i < r; ++i) {
        out[i] = z[i];
        for (std::size_t j = 0; j < n - r; ++j) out[i] += d.M()(i, j) * z[r + j];
    }
    return out;
}

IntVec project_last(const StandardRepMatrix& d, const IntVec& z) {
    const std::size_t r = d.r(), n = d.n();
    if (z.size() != n) throw dimension_error("project_last: vector length mismatch");
    IntVec out(n, Int(0));
    for (std::size_t j = 0; j < n - r; ++j) {
        out[r + j] = z[r + j];
        for (std::size_t i = 0; i < r; ++i) out[r + j] -= d.M()(i, j) * z[i];
    }
    return out;
}

std::pair<IntMat, IntMat> alt_bases(const StandardRepMatrix& d) {
    const std::size_t r = d.r(), n = d.n(), k = n - r;
    IntMat dd = d.matrix() * d.matrix().transpose();
    IntMat dhat = d.dual_matrix();
    IntMat dhdh = dhat * dhat.transpose();
    IntMat prime(n, n), dprime(n, n);
    for (std::size_t i = 0; i < r; ++i) {
        prime(i, i) = 1;
        for (std::size_t j = 0; j < k; ++j) prime(i, r + j) = d.M()(i, j);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prime(r + i, r + j) = dhdh(i, j);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) dprime(i, j) = dd(i, j);
    for (std::size_t i = 0; i < k; ++i) {
        dprime(r + i, r + i) = 1;
        for (std::size_t j = 0; j < r; ++j) dprime(r + i, j) = -d.M()(j, i);
    }
    return {prime, dprime};
}

LowerTile build_lower_tile(const StandardRepMatrix& d, const ShiftingVector& w,
                           LowerKind kind) {
    const std::size_t r = d.r(), k = d.n() - d.r();
    LowerTile tile;
    tile.kind = kind;
    if (kind == LowerKind::Prime) {
        tile.translation_lattice = d.matrix() * d.matrix().transpose();
        for (const auto& e : d.enumerate_bases()) {
            auto base = p1(d, e.basis);
            for (const auto& zh : p2(d, e.basis).oriented_by(w.w_hat).integer_points()) {
                IntVec shift(r, Int(0));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < k; ++j) shift[i] += d.M()(i, j) * zh[j];
                tile.pieces.push_back({e.basis, base.translated(shift)});
            }
        }
    } else {
        IntMat dhat = d.dual_matrix();
        tile.translation_lattice = dhat * dhat.transpose();
        for (const auto& e : d.enumerate_bases()) {
            auto base = p2(d, e.basis);
            for (const auto& z : p1(d, e.basis).oriented_by(w.w).integer_points()) {
                IntVec shift(k, Int(0));
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t i = 0; i < r; ++i) shift[j] -= d.M()(i, j) * z[i];
                tile.pieces.push_back({e.basis, base.translated(shift)});
            }
        }
    }
    return tile;
}

std::vector<std::pair<Basis, std::vector<IntVec>>> lower_representatives(
    const StandardRepMatrix& d, const LowerTile& tile, const ShiftingVector& w) {
    const std::size_t r = d.r(), n = d.n();
    const RatVec& dir = tile.kind == LowerKind::Prime ? w.w : w.w_hat;
    std::vector<std::pair<Basis, std::vector<IntVec>>> out;
    for (const auto& piece : tile.pieces) {
        auto pts = piece.region.oriented_by(dir).integer_points();
        if (out.empty() || !(out.back().first == piece.basis))
            out.emplace_back(piece.basis, std::vector<IntVec>{});
        for (const auto& p : pts) {
            IntVec z(n, Int(0));
            if (tile.kind == LowerKind::Prime) {
                for (std::size_t i = 0; i < r; ++i) z[i] = p[i];
            } else {
                for (std::size_t i = 0; i < n - r; ++i) z[r + i] = p[i];
            }
            out.back().second.push_back(std::move(z));
        }
    }
    for (auto& [b, pts] : out) std::sort(pts.begin(), pts.end());
    return out;
}

}  // namespace sandtile
