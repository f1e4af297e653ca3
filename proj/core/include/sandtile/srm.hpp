#pragma once

#include <vector>

#include "sandtile/linalg.hpp"
#include "sandtile/matrix.hpp"

namespace sandtile {

// A set of r column indices of D with nonzero determinant. Indices are
// 1-based and strictly increasing.
struct Basis {
    std::vector<int> indices;

    bool operator==(const Basis& o) const { return indices == o.indices; }
    bool operator<(const Basis& o) const { return indices < o.indices; }
};

struct BasisEntry {
    Basis basis;
    Int multiplicity;
};

// Bases in lexicographic order, each with its multiplicity.
using BasisTable = std::vector<BasisEntry>;

// The matrix D = (I_r | M), defined by r, n, and the r x (n-r) block M.
class StandardRepMatrix {
  public:
    StandardRepMatrix(std::size_t r, std::size_t n, IntMat m);

    std::size_t r() const { return r_; }
    std::size_t n() const { return n_; }
    const IntMat& M() const { return m_; }

    const IntMat& matrix() const { return d_; }   // (I_r | M)
    IntMat dual_matrix() const;                   // (-M^T | I_{n-r})
    IntMat full_matrix() const;                   // D stacked over the dual

    // Columns of D (resp. the dual matrix) selected by 1-based indices.
    IntMat columns(const std::vector<int>& idx) const;
    IntMat dual_columns(const std::vector<int>& idx) const;

    // Complement of a basis in [1, n], increasing.
    std::vector<int> complement(const Basis& b) const;

    // All C(n, r) subsets tested by exact determinant; lexicographic order.
    BasisTable enumerate_bases() const;

    Int basis_multiplicity(const Basis& b) const;

  private:
    std::size_t r_, n_;
    IntMat m_;
    IntMat d_;
};

struct MatrixTreeCheck {
    Int sum_squares;
    Int det_full;
    bool equal;
};

// Sum of squared multiplicities against |det| of the full matrix.
MatrixTreeCheck matrix_tree_check(const StandardRepMatrix& d);

}  // namespace sandtile
