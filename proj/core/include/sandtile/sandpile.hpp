#pragma once

#include "sandtile/srm.hpp"

namespace sandtile {

// Canonical residue of a Z^n vector modulo the row lattice of the full
// matrix. Each coordinate lies in [0, pivot_i) for the triangular HNF basis.
struct SandpileClass {
    IntVec residue;

    bool operator==(const SandpileClass& o) const { return residue == o.residue; }
    bool operator<(const SandpileClass& o) const { return residue < o.residue; }
};

class SandpileLattice {
  public:
    explicit SandpileLattice(const StandardRepMatrix& d);

    const StandardRepMatrix& source() const { return src_; }
    const IntMat& hnf_basis() const { return hnf_; }

    Int group_order() const;

    // True iff z - z' lies in the row lattice of the full matrix (rational
    // solve, then an integrality check).
    bool equivalent(const IntVec& z, const IntVec& zp) const;

    // Unique reduction of z against the triangular HNF pivots; idempotent.
    SandpileClass canonical(const IntVec& z) const;

    // All residues, lexicographic over the HNF box. Throws size_error when
    // the group order exceeds the budget.
    std::vector<SandpileClass> enumerate_classes(const Int& budget = Int(1000000)) const;

  private:
    StandardRepMatrix src_;
    IntMat hnf_;       // n x n upper triangular, positive pivots
    RatMat full_t_;    // transpose of the full matrix, rational
};

}  // namespace sandtile
