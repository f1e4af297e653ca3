#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "sandtile/tiling.hpp"

using namespace sandtile;
using sandtile::testing::fiber_set;
using sandtile::testing::point_set;

namespace {

const StandardRepMatrix& running_example() {
    static StandardRepMatrix d(2, 3, IntMat{{3}, {2}});
    return d;
}

ShiftingVector ones() {
    return validate_shifting(running_example(), {Rat(1), Rat(1), Rat(1)});
}

// Integer points by scanning the vertex bounding box with exact
// half-open membership done directly on the coefficients.
std::set<IntVec> brute_force_points(const OrientedParallelepiped& region) {
    std::size_t k = region.dim();
    IntVec lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
        lo[i] = region.anchor()[i];
        hi[i] = region.anchor()[i];
    }
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
        IntVec v = region.anchor();
        for (std::size_t g = 0; g < k; ++g)
            if (mask & (std::size_t(1) << g))
                for (std::size_t i = 0; i < k; ++i) v[i] += region.generators()(i, g);
        for (std::size_t i = 0; i < k; ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    }
    std::set<IntVec> out;
    IntVec p = lo;
    for (;;) {
        if (region.contains(to_rational(p))) out.insert(p);
        std::size_t i = 0;
        while (i < k && p[i] == hi[i]) p[i] = lo[i], ++i;
        if (i == k) break;
        ++p[i];
    }
    return out;
}

}  // namespace

TEST_CASE("P1, P2 and P of the running example") {
    const auto& d = running_example();
    auto p1_12 = p1(d, Basis{{1, 2}});
    CHECK(p1_12.generators() == IntMat::identity(2));
    CHECK(p1_12.volume() == 1);

    auto p1_13 = p1(d, Basis{{1, 3}});
    CHECK(p1_13.generators() == IntMat{{1, 3}, {0, 2}});
    CHECK(p1_13.volume() == 2);

    CHECK(p2(d, Basis{{1, 2}}).generators() == IntMat{{1}});
    CHECK(p2(d, Basis{{1, 3}}).generators() == IntMat{{-2}});
    CHECK(p2(d, Basis{{2, 3}}).generators() == IntMat{{-3}});

    auto p_13 = p_full(d, Basis{{1, 3}});
    CHECK(p_13.generators() == IntMat{{1, 0, 3}, {0, 0, 2}, {0, -2, 0}});
    CHECK(p_13.volume() == 4);
    CHECK(p_full(d, Basis{{1, 2}}).generators() ==
          IntMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(p_full(d, Basis{{2, 3}}).volume() == 9);
}

TEST_CASE("product structure of P(B)") {
    const auto& d = running_example();
    Basis b{{1, 3}};
    auto whole = p_full(d, b);
    auto first = p1(d, b);
    auto second = p2(d, b);
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> num(-8, 8);
    for (int t = 0; t < 40; ++t) {
        RatVec p{Rat(num(rng), 4), Rat(num(rng), 4), Rat(num(rng), 4)};
        p[0].canonicalize(), p[1].canonicalize(), p[2].canonicalize();
        bool split = first.contains({p[0], p[1]}) && second.contains({p[2]});
        CHECK(whole.contains(p) == split);
    }
}

TEST_CASE("shifting vector validation") {
    const auto& d = running_example();
    CHECK_NOTHROW(validate_shifting(d, {Rat(1), Rat(1), Rat(1)}));
    CHECK_NOTHROW(validate_shifting(d, {Rat(-1), Rat(2), Rat(-2)}));
    CHECK_THROWS_AS(validate_shifting(d, {Rat(1), Rat(0), Rat(1)}), validation_error);
    CHECK_THROWS_AS(validate_shifting(d, {Rat(1), Rat(1)}), dimension_error);
}

TEST_CASE("orientation from a direction") {
    auto square = OrientedParallelepiped(IntMat::identity(2), IntVec{Int(0), Int(0)})
                      .oriented_by({Rat(1), Rat(1)});
    CHECK(square.orientation() ==
          std::vector<HalfOpen>{HalfOpen::ClosedBelow, HalfOpen::ClosedBelow});
    CHECK(point_set(square.integer_points()) == std::set<IntVec>{{Int(0), Int(0)}});

    auto seg2 = OrientedParallelepiped(IntMat{{-2}}, IntVec{Int(0)}).oriented_by({Rat(1)});
    CHECK(seg2.orientation() == std::vector<HalfOpen>{HalfOpen::ClosedAbove});
    CHECK(point_set(seg2.integer_points()) == std::set<IntVec>{{Int(-2)}, {Int(-1)}});

    auto seg3 = OrientedParallelepiped(IntMat{{-3}}, IntVec{Int(0)}).oriented_by({Rat(1)});
    CHECK(point_set(seg3.integer_points()) ==
          std::set<IntVec>{{Int(-3)}, {Int(-2)}, {Int(-1)}});

    CHECK_THROWS_AS(OrientedParallelepiped(IntMat::identity(2), IntVec{Int(0), Int(0)})
                        .oriented_by({Rat(1), Rat(0)}),
                    validation_error);
}

TEST_CASE("oriented integer points of the running example") {
    const auto& d = running_example();
    auto pts13 = p1(d, Basis{{1, 3}}).oriented_by({Rat(1), Rat(1)}).integer_points();
    CHECK(point_set(pts13) == std::set<IntVec>{{Int(1), Int(0)}, {Int(2), Int(1)}});
    auto pts23 = p1(d, Basis{{2, 3}}).oriented_by({Rat(1), Rat(1)}).integer_points();
    CHECK(point_set(pts23) ==
          std::set<IntVec>{{Int(0), Int(0)}, {Int(1), Int(1)}, {Int(2), Int(2)}});
}

TEST_CASE("integer point count equals the volume") {
    std::mt19937 rng(47);
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<std::size_t> kd(1, 3);
        std::size_t k = kd(rng);
        IntMat gens = testing::random_block(rng, k, k, -4, 4);
        if (det(gens) == 0) continue;
        IntVec anchor(k);
        std::uniform_int_distribution<int> ad(-3, 3);
        for (auto& a : anchor) a = ad(rng);
        RatVec dir(k);
        OrientedParallelepiped region(gens, anchor);
        bool ok = false;
        std::uniform_int_distribution<int> dd(-5, 5);
        while (!ok) {
            for (auto& q : dir) q = Rat(dd(rng));
            try {
                region = region.oriented_by(dir);
                ok = true;
            } catch (const validation_error&) {
            }
        }
        auto pts = region.integer_points();
        CHECK(Int(pts.size()) == region.volume());
        CHECK(point_set(pts) == brute_force_points(region));
    }
}

TEST_CASE("w-representatives reproduce the reference fibers") {
    const auto& d = running_example();
    auto f = w_representatives(d, ones());
    CHECK(f.group_order() == 14);
    CHECK(fiber_set(f, Basis{{1, 2}}) == std::set<IntVec>{{0, 0, 0}});
    CHECK(fiber_set(f, Basis{{1, 3}}) ==
          std::set<IntVec>{{1, 0, -1}, {2, 1, -1}, {1, 0, -2}, {2, 1, -2}});
    CHECK(fiber_set(f, Basis{{2, 3}}) ==
          std::set<IntVec>{{0, 0, -1},
                           {1, 1, -1},
                           {2, 2, -1},
                           {0, 0, -2},
                           {1, 1, -2},
                           {2, 2, -2},
                           {0, 0, -3},
                           {1, 1, -3},
                           {2, 2, -3}});

    auto fp = w_representatives(d, validate_shifting(d, {Rat(-1), Rat(2), Rat(-2)}));
    CHECK(fiber_set(fp, Basis{{1, 2}}) == std::set<IntVec>{{1, 0, 1}});
    CHECK(fiber_set(fp, Basis{{1, 3}}) ==
          std::set<IntVec>{{1, 0, 0}, {2, 1, 0}, {1, 0, -1}, {2, 1, -1}});
    CHECK(fiber_set(fp, Basis{{2, 3}}) ==
          std::set<IntVec>{{3, 2, 0},
                           {1, 1, 0},
                           {2, 2, 0},
                           {3, 2, -1},
                           {1, 1, -1},
                           {2, 2, -1},
                           {3, 2, -2},
                           {1, 1, -2},
                           {2, 2, -2}});

    StandardRepMatrix ident(2, 2, IntMat(2, 0));
    auto fi = w_representatives(ident, validate_shifting(ident, {Rat(1), Rat(1)}));
    REQUIRE(fi.fibers.size() == 1);
    CHECK(fiber_set(fi, Basis{{1, 2}}) == std::set<IntVec>{{0, 0}});
}

TEST_CASE("applying the multijection") {
    const auto& d = running_example();
    SandpileLattice lat(d);
    auto f = w_representatives(d, ones());

    auto [b0, z0] = f.apply(lat, {0, 0, 0});
    CHECK(b0.indices == std::vector<int>{1, 2});
    CHECK(z0 == IntVec{0, 0, 0});

    auto [b1, z1] = f.apply(lat, {2, 0, 2});  // (1,0,-1) plus row 1 of the full matrix
    CHECK(b1.indices == std::vector<int>{1, 3});
    CHECK(z1 == IntVec{1, 0, -1});

    auto [b2, z2] = f.apply(lat, {0, 0, -10});
    CHECK(b2.indices == std::vector<int>{1, 3});
    CHECK(lat.equivalent(z2, {0, 0, -10}));
}

TEST_CASE("corner points") {
    const auto& d = running_example();
    auto w = ones();
    auto c12 = corner_point(d, Basis{{1, 2}}, w);
    CHECK(c12.point == IntVec{0, 0, 0});
    CHECK(c12.zero_one == IntVec{0, 0, 0});

    SandpileLattice lat(d);
    for (const auto& e : d.enumerate_bases()) {
        auto c = corner_point(d, e.basis, w);
        CHECK(lat.equivalent(c.point, c.zero_one));
        // the corner is the w-associated representative of its basis
        auto f = w_representatives(d, w);
        auto fiber = fiber_set(f, e.basis);
        CHECK(fiber.count(c.point) == 1);
    }

    for (const auto& e : d.enumerate_bases()) {
        auto corners = p1_corner_points(d, e.basis);
        CHECK(corners.size() == 4);  // 2^r
        std::set<IntVec> distinct(corners.begin(), corners.end());
        CHECK(distinct.size() == 4);
    }
}

TEST_CASE("tile membership") {
    const auto& d = running_example();
    auto centroid = [](const OrientedParallelepiped& r) {
        RatVec c(r.dim());
        for (std::size_t i = 0; i < r.dim(); ++i) {
            c[i] = Rat(r.anchor()[i]);
            for (std::size_t g = 0; g < r.dim(); ++g)
                c[i] += Rat(r.generators()(i, g), 2);
        }
        return c;
    };
    auto inside12 = tile_membership(d, centroid(p_full(d, Basis{{1, 2}})));
    REQUIRE(inside12.size() == 1);
    CHECK(inside12[0].indices == std::vector<int>{1, 2});

    auto origin = tile_membership(d, {Rat(0), Rat(0), Rat(0)});
    CHECK(origin.size() == 3);

    auto inside23 = tile_membership(d, centroid(p_full(d, Basis{{2, 3}})));
    REQUIRE(inside23.size() == 1);
    CHECK(inside23[0].indices == std::vector<int>{2, 3});
}
