#pragma once

#include "sandtile/matrix.hpp"

namespace sandtile {

// Exact determinant of a square integer matrix (fraction-free Bareiss
// elimination).
Int det(const IntMat& a);

// Exact determinant over the rationals (Gaussian elimination).
Rat det(const RatMat& a);

// Solves A x = b for invertible A. Throws singular_error otherwise.
RatVec solve(const RatMat& a, const RatVec& b);

// Row-style Hermite normal form of the lattice generated by the rows of A.
// Zero rows are dropped, pivots are positive, and entries above each pivot
// are reduced into [0, pivot).
IntMat hnf_row(const IntMat& a);

// Exact rank via rational elimination.
std::size_t rank(const RatMat& a);
std::size_t rank(const IntMat& a);

// Adjugate of a square integer matrix, so that adj(A) * A = det(A) * I.
IntMat adjugate(const IntMat& a);

}  // namespace sandtile
