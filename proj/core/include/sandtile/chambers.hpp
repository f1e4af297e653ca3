#pragma once

#include "sandtile/tiling.hpp"

namespace sandtile {

// A central arrangement in R^k, stored as the deduplicated, sorted list of
// primitive integer normals (first nonzero entry positive).
struct CentralArrangement {
    std::size_t ambient_dim = 0;
    std::vector<IntVec> normals;
};

struct ChamberSignature {
    std::vector<int> signs;  // +1 / -1 per normal

    bool operator==(const ChamberSignature& o) const { return signs == o.signs; }
};

// The hyperplanes spanned by rank-(k-1) subsets of the given columns.
// For k = 1 the only central hyperplane is the origin, with normal (1).
CentralArrangement arrangement(const IntMat& columns, std::size_t ambient_dim);

// Arrangements H(D) (columns of D in R^r) and H(Dhat) (columns of the dual
// matrix in R^{n-r}).
CentralArrangement arrangement_of(const StandardRepMatrix& d);
CentralArrangement arrangement_of_dual(const StandardRepMatrix& d);

// Sign vector of v against the normals; a zero dot product means v lies on
// a hyperplane and raises validation_error naming the normal.
ChamberSignature signature(const RatVec& v, const CentralArrangement& a);

// True iff both blocks of the two shifting vectors share chambers.
bool shifting_equivalent(const StandardRepMatrix& d, const ShiftingVector& w,
                         const ShiftingVector& wp);

}  // namespace sandtile
