#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "sandtile/lower.hpp"
#include "sandtile/tiling.hpp"

namespace sandtile::testing {

inline IntMat random_block(std::mt19937& rng, std::size_t rows, std::size_t cols,
                           int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

inline StandardRepMatrix random_srm(std::mt19937& rng, std::size_t max_r,
                                    std::size_t max_n, int bound) {
    std::uniform_int_distribution<std::size_t> rd(1, max_r);
    std::size_t r = rd(rng);
    std::uniform_int_distribution<std::size_t> nd(r, max_n);
    std::size_t n = nd(rng);
    return StandardRepMatrix(r, n, random_block(rng, r, n - r, -bound, bound));
}

// Random rational vector with small numerators and denominators, retried
// until it avoids every facet span.
inline ShiftingVector random_shifting(std::mt19937& rng, const StandardRepMatrix& d) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    for (;;) {
        RatVec w(d.n());
        for (auto& q : w) {
            q = Rat(num(rng), den(rng));
            q.canonicalize();
        }
        try {
            return validate_shifting(d, w);
        } catch (const validation_error&) {
        }
    }
}

inline std::set<IntVec> point_set(const std::vector<IntVec>& pts) {
    return {pts.begin(), pts.end()};
}

inline std::set<IntVec> fiber_set(const Multijection& f, const Basis& b) {
    return point_set(f.fiber(b));
}

}  // namespace sandtile::testing
