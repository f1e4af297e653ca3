#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "sandtile/linalg.hpp"

using namespace sandtile;

namespace {

// Cofactor expansion along the first row; independent of the Bareiss path.
Int det_cofactor(const IntMat& a) {
    std::size_t k = a.rows();
    if (k == 0) return 1;
    if (k == 1) return a(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (a(0, j) == 0) continue;
        IntMat minor(k - 1, k - 1);
        for (std::size_t i = 1; i < k; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < k; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = a(i, c);
            }
        }
        Int term = a(0, j) * det_cofactor(minor);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

// All lattice points of the row lattice of `a` inside the box [-5,5]^2,
// found by scanning small coefficient combinations.
std::set<IntVec> lattice_points_in_box(const IntMat& a) {
    std::set<IntVec> pts;
    std::vector<int> coeff(a.rows(), -10);
    for (;;) {
        IntVec p(a.cols(), Int(0));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) p[j] += Int(coeff[i]) * a(i, j);
        bool inside = true;
        for (const auto& x : p)
            if (x < -5 || x > 5) inside = false;
        if (inside) pts.insert(p);
        std::size_t i = 0;
        while (i < coeff.size() && coeff[i] == 10) coeff[i++] = -10;
        if (i == coeff.size()) break;
        ++coeff[i];
    }
    return pts;
}

bool integral_row_combination(const IntMat& basis, const IntVec& v) {
    RatMat bt = to_rational(basis.transpose());
    RatVec x = solve(bt, to_rational(v));
    for (const auto& q : x)
        if (!is_integral(q)) return false;
    return true;
}

}  // namespace

TEST_CASE("integer determinant") {
    CHECK(det(IntMat::identity(2)) == 1);
    CHECK(det(IntMat{{0, 3}, {1, 2}}) == -3);
    IntMat full{{1, 0, 3}, {0, 1, 2}, {-3, -2, 1}};
    CHECK(det(full) == 14);
    CHECK(det(full) == det_cofactor(full));
    CHECK_THROWS_AS(det(IntMat(2, 3)), dimension_error);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        IntMat a = testing::random_block(rng, 3, 3, -6, 6);
        IntMat b = testing::random_block(rng, 3, 3, -6, 6);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a) == det_cofactor(a));
    }
}

TEST_CASE("rational solve") {
    RatVec b{Rat(1), Rat(1)};
    CHECK(solve(to_rational(IntMat::identity(2)), b) == b);
    RatVec x = solve(to_rational(IntMat{{1, 3}, {0, 2}}), b);
    CHECK(x == RatVec{Rat(-1, 2), Rat(1, 2)});
    CHECK(solve(to_rational(IntMat{{2, 0}, {0, 2}}), b) == RatVec{Rat(1, 2), Rat(1, 2)});
    CHECK_THROWS_AS(solve(to_rational(IntMat{{1, 1}, {2, 2}}), b), singular_error);
}

TEST_CASE("solve round-trips random systems") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        IntMat a = testing::random_block(rng, 3, 3, -5, 5);
        if (det(a) == 0) continue;
        RatVec x = to_rational(testing::random_block(rng, 3, 1, -7, 7).col(0));
        RatMat aq = to_rational(a);
        RatVec b(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) b[i] += aq(i, j) * x[j];
        CHECK(solve(aq, b) == x);
    }
}

TEST_CASE("row Hermite normal form") {
    CHECK(hnf_row(IntMat::identity(3)) == IntMat::identity(3));

    IntMat a{{2, 0}, {0, 3}, {1, 1}};
    IntMat h = hnf_row(a);
    CHECK(lattice_points_in_box(a) == lattice_points_in_box(h));

    IntMat full{{1, 0, 3}, {0, 1, 2}, {-3, -2, 1}};
    IntMat hf = hnf_row(full);
    REQUIRE(hf.rows() == 3);
    Int pivot_product = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < i; ++j) CHECK(hf(i, j) == 0);
        CHECK(hf(i, i) > 0);
        pivot_product *= hf(i, i);
    }
    CHECK(pivot_product == 14);
}

TEST_CASE("hnf generates the same lattice") {
    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        IntMat a = testing::random_block(rng, 3, 3, -5, 5);
        if (det(a) == 0) continue;
        IntMat h = hnf_row(a);
        REQUIRE(h.rows() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(integral_row_combination(h, a.row(i)));
            CHECK(integral_row_combination(a, h.row(i)));
        }
    }
}

TEST_CASE("rank") {
    CHECK(rank(IntMat(3, 3)) == 0);
    CHECK(rank(IntMat::identity(4)) == 4);
    CHECK(rank(IntMat{{1, 3, 4}, {0, 2, 2}}) == 2);
}

TEST_CASE("adjugate identity") {
    std::mt19937 rng(17);
    for (int t = 0; t < 20; ++t) {
        IntMat a = testing::random_block(rng, 3, 3, -5, 5);
        Int d = det(a);
        if (d == 0) continue;
        IntMat prod = adjugate(a) * a;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(prod(i, j) == (i == j ? d : Int(0)));
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rat(1, 2));
    CHECK(parse_rational("-2") == Rat(-2));
    CHECK(format_rational(Rat(-1, 2)) == "-1/2");
    CHECK(format_rational(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
}
