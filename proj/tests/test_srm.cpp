#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sandtile/srm.hpp"

using namespace sandtile;

namespace {

const StandardRepMatrix& running_example() {
    static StandardRepMatrix d(2, 3, IntMat{{3}, {2}});
    return d;
}

// Cauchy-Binet: det(D D^T) equals the sum of squared maximal minors.
Int gram_det(const StandardRepMatrix& d) {
    return det(d.matrix() * d.matrix().transpose());
}

}  // namespace

TEST_CASE("dual and full matrices") {
    const auto& d = running_example();
    CHECK(d.dual_matrix() == IntMat{{-3, -2, 1}});
    CHECK(d.full_matrix() == IntMat{{1, 0, 3}, {0, 1, 2}, {-3, -2, 1}});

    StandardRepMatrix square(2, 2, IntMat(2, 0));
    CHECK(square.dual_matrix().rows() == 0);
    CHECK(square.full_matrix() == IntMat::identity(2));
}

TEST_CASE("orthogonality of D and its dual") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        auto d = testing::random_srm(rng, 3, 6, 4);
        IntMat prod = d.matrix() * d.dual_matrix().transpose();
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    }
}

TEST_CASE("basis enumeration") {
    auto table = running_example().enumerate_bases();
    REQUIRE(table.size() == 3);
    CHECK(table[0].basis.indices == std::vector<int>{1, 2});
    CHECK(table[0].multiplicity == 1);
    CHECK(table[1].basis.indices == std::vector<int>{1, 3});
    CHECK(table[1].multiplicity == 2);
    CHECK(table[2].basis.indices == std::vector<int>{2, 3});
    CHECK(table[2].multiplicity == 3);

    StandardRepMatrix ident(3, 3, IntMat(3, 0));
    auto it = ident.enumerate_bases();
    REQUIRE(it.size() == 1);
    CHECK(it[0].basis.indices == std::vector<int>{1, 2, 3});
    CHECK(it[0].multiplicity == 1);

    StandardRepMatrix row(1, 2, IntMat{{3}});
    auto rt = row.enumerate_bases();
    REQUIRE(rt.size() == 2);
    CHECK(rt[0].multiplicity == 1);
    CHECK(rt[1].multiplicity == 3);
}

TEST_CASE("matrix-tree identity") {
    auto check = matrix_tree_check(running_example());
    CHECK(check.sum_squares == 14);
    CHECK(check.det_full == 14);
    CHECK(check.equal);

    auto trivial = matrix_tree_check(StandardRepMatrix(2, 2, IntMat(2, 0)));
    CHECK(trivial.sum_squares == 1);
    CHECK(trivial.det_full == 1);
    CHECK(trivial.equal);
}

TEST_CASE("matrix-tree identity on random matrices") {
    std::mt19937 rng(29);
    for (int t = 0; t < 20; ++t) {
        StandardRepMatrix d(2, 6, testing::random_block(rng, 2, 4, -5, 5));
        auto check = matrix_tree_check(d);
        CHECK(check.equal);
        CHECK(check.sum_squares == gram_det(d));
    }
}

TEST_CASE("multiplicities are self-dual") {
    std::mt19937 rng(31);
    for (int t = 0; t < 15; ++t) {
        auto d = testing::random_srm(rng, 3, 6, 4);
        for (const auto& e : d.enumerate_bases()) {
            IntMat dual_cols = d.dual_columns(d.complement(e.basis));
            CHECK(abs(det(dual_cols)) == e.multiplicity);
        }
    }
}

TEST_CASE("basis validation") {
    const auto& d = running_example();
    CHECK(d.basis_multiplicity(Basis{{2, 3}}) == 3);
    CHECK(d.basis_multiplicity(Basis{{1, 2}}) == 1);
    CHECK(d.complement(Basis{{1, 3}}) == std::vector<int>{2});
    CHECK_THROWS_AS(d.columns({0}), dimension_error);
}
