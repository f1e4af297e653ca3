#pragma once

#include <map>
#include <optional>

#include "sandtile/sandpile.hpp"

namespace sandtile {

// Per-generator half-open orientation. ClosedBelow means the coefficient
// ranges over [0,1); ClosedAbove means (0,1].
enum class HalfOpen { ClosedBelow, ClosedAbove };

// A parallelepiped spanned by linearly independent integer generators,
// translated by an integer anchor. Orientation is optional: without it the
// region is closed, with it the region is half-open per generator.
class OrientedParallelepiped {
  public:
    OrientedParallelepiped(IntMat generators, IntVec anchor);

    std::size_t dim() const { return gens_.rows(); }
    std::size_t generator_count() const { return gens_.cols(); }
    const IntMat& generators() const { return gens_; }
    const IntVec& anchor() const { return anchor_; }
    const Int& volume() const { return abs_det_; }
    bool oriented() const { return oriented_; }
    const std::vector<HalfOpen>& orientation() const { return orientation_; }

    OrientedParallelepiped translated(const IntVec& by) const;

    // Orientation per the sign of each coefficient of `direction` in the
    // generator basis: positive -> closed below, negative -> closed above.
    // A zero coefficient means the direction lies in a facet span.
    OrientedParallelepiped oriented_by(const RatVec& direction) const;

    // Exact membership. Closed region when unoriented, half-open otherwise.
    bool contains(const RatVec& p) const;

    // Generator-basis coefficients of p - anchor.
    RatVec coefficients(const RatVec& p) const;

    // All integer points (requires orientation); count equals |det|.
    std::vector<IntVec> integer_points() const;

  private:
    IntMat gens_;              // dim x k generator columns, square (k = dim)
    IntVec anchor_;
    IntMat adj_;               // adjugate of the generator matrix
    Int det_, abs_det_;
    bool oriented_ = false;
    std::vector<HalfOpen> orientation_;
};

struct ShiftingVector {
    RatVec w;      // length r
    RatVec w_hat;  // length n - r

    RatVec full() const;
};

// P_1(B): the parallelepiped of D's B-columns, anchored at the origin.
OrientedParallelepiped p1(const StandardRepMatrix& d, const Basis& b);
// P_2(B): the parallelepiped of the dual matrix's non-B columns.
OrientedParallelepiped p2(const StandardRepMatrix& d, const Basis& b);
// P(B): the n-dimensional product, built from the masked full-matrix columns.
OrientedParallelepiped p_full(const StandardRepMatrix& d, const Basis& b);

// Accepts w iff its basis-coefficient vectors never vanish: w avoids every
// facet span of every P_1(B), and w_hat of every P_2(B). Throws
// validation_error naming a violated basis otherwise.
ShiftingVector validate_shifting(const StandardRepMatrix& d, const RatVec& w_full);

struct Multijection {
    ShiftingVector shifting;
    // per basis, the w-associated integer representatives
    std::vector<std::pair<Basis, std::vector<IntVec>>> fibers;
    // canonical residue -> (basis index in `fibers`, representative)
    std::map<SandpileClass, std::pair<std::size_t, IntVec>> class_index;

    Int group_order() const;
    const std::vector<IntVec>& fiber(const Basis& b) const;
    // Basis and representative of z's class; total on Z^n.
    std::pair<Basis, IntVec> apply(const SandpileLattice& lat, const IntVec& z) const;
};

// Materializes every fiber as the product of the oriented integer points of
// P_1(B) and P_2(B), and indexes them by canonical residue. The fibers must
// tile the group exactly; any duplicate or miscount is an internal error.
Multijection w_representatives(const StandardRepMatrix& d, const ShiftingVector& w);

struct CornerPoint {
    IntVec point;       // unique w-associated corner of P(B)
    Basis basis;
    IntVec zero_one;    // {0,1}^n vector in the same sandpile class
};

CornerPoint corner_point(const StandardRepMatrix& d, const Basis& b,
                         const ShiftingVector& w);

// All 2^r corner points of P_1(B) (one per subset of the generators).
std::vector<IntVec> p1_corner_points(const StandardRepMatrix& d, const Basis& b);

// All bases whose closed P(B) contains p. Interior points of the tile
// return exactly one basis.
std::vector<Basis> tile_membership(const StandardRepMatrix& d, const RatVec& p);

}  // namespace sandtile
