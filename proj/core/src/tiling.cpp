#include "sandtile/tiling.hpp"

#include <algorithm>
#include <sstream>

namespace sandtile {

namespace {

std::string basis_label(const Basis& b) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < b.indices.size(); ++i)
        os << (i ? "," : "") << b.indices[i];
    os << "}";
    return os.str();
}

}  // namespace

OrientedParallelepiped::OrientedParallelepiped(IntMat generators, IntVec anchor)
    : gens_(std::move(generators)), anchor_(std::move(anchor)) {
    if (gens_.rows() != gens_.cols())
        throw dimension_error("parallelepiped generators must be square");
    if (anchor_.size() != gens_.rows())
        throw dimension_error("anchor length mismatch");
    det_ = det(gens_);
    if (gens_.rows() > 0 && det_ == 0)
        throw singular_error("parallelepiped generators are dependent");
    abs_det_ = abs(det_);
    adj_ = gens_.rows() > 0 ? adjugate(gens_) : IntMat(0, 0);
}

OrientedParallelepiped OrientedParallelepiped::translated(const IntVec& by) const {
    if (by.size() != anchor_.size()) throw dimension_error("translation length mismatch");
    OrientedParallelepiped out = *this;
    for (std::size_t i = 0; i < anchor_.size(); ++i) out.anchor_[i] += by[i];
    return out;
}

OrientedParallelepiped OrientedParallelepiped::oriented_by(const RatVec& direction) const {
    if (direction.size() != dim()) throw dimension_error("direction length mismatch");
    OrientedParallelepiped out = *this;
    out.oriented_ = true;
    out.orientation_.assign(dim(), HalfOpen::ClosedBelow);
    for (std::size_t i = 0; i < dim(); ++i) {
        Rat num(0);
        for (std::size_t j = 0; j < dim(); ++j) num += Rat(adj_(i, j)) * direction[j];
        int s = sgn(num) * sgn(det_);
        if (s == 0)
            throw validation_error("direction lies in the span of a facet");
        out.orientation_[i] = s > 0 ? HalfOpen::ClosedBelow : HalfOpen::ClosedAbove;
    }
    return out;
}

RatVec OrientedParallelepiped::coefficients(const RatVec& p) const {
    if (p.size() != dim()) throw dimension_error("point length mismatch");
    RatVec coeff(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        Rat num(0);
        for (std::size_t j = 0; j < dim(); ++j)
            num += Rat(adj_(i, j)) * (p[j] - Rat(anchor_[j]));
        coeff[i] = num / Rat(det_);
    }
    return coeff;
}

bool OrientedParallelepiped::contains(const RatVec& p) const {
    if (p.size() != dim()) throw dimension_error("point length mismatch");
    const int ds = sgn(det_);
    for (std::size_t i = 0; i < dim(); ++i) {
        Rat num(0);
        for (std::size_t j = 0; j < dim(); ++j)
            num += Rat(adj_(i, j)) * (p[j] - Rat(anchor_[j]));
        if (ds < 0) num = -num;
        // num / |det| must lie in the coefficient range
        if (!oriented_) {
            if (num < 0 || num > Rat(abs_det_)) return false;
        } else if (orientation_[i] == HalfOpen::ClosedBelow) {
            if (num < 0 || num >= Rat(abs_det_)) return false;
        } else {
            if (num <= 0 || num > Rat(abs_det_)) return false;
        }
    }
    return true;
}

std::vector<IntVec> OrientedParallelepiped::integer_points() const {
    if (!oriented_)
        throw validation_error("integer_points requires an orientation");
    const std::size_t k = dim();
    if (k == 0) return {IntVec{}};
    IntVec lo = anchor_, hi = anchor_;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (gens_(i, j) < 0) lo[i] += gens_(i, j);
            else hi[i] += gens_(i, j);
        }
    std::vector<IntVec> out;
    IntVec p = lo;
    const int ds = sgn(det_);
    IntVec diff(k);
    while (true) {
        bool inside = true;
        for (std::size_t j = 0; j < k; ++j) diff[j] = p[j] - anchor_[j];
        for (std::size_t i = 0; i < k && inside; ++i) {
            Int num(0);
            for (std::size_t j = 0; j < k; ++j) num += adj_(i, j) * diff[j];
            if (ds < 0) num = -num;
            if (orientation_[i] == HalfOpen::ClosedBelow)
                inside = num >= 0 && num < abs_det_;
            else
                inside = num > 0 && num <= abs_det_;
        }
        if (inside) out.push_back(p);
        std::size_t i = k;
        while (i > 0) {
            --i;
            p[i] += 1;
            if (p[i] <= hi[i]) break;
            p[i] = lo[i];
            if (i == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
    }
}

RatVec ShiftingVector::full() const {
    RatVec out = w;
    out.insert(out.end(), w_hat.begin(), w_hat.end());
    return out;
}

OrientedParallelepiped p1(const StandardRepMatrix& d, const Basis& b) {
    return OrientedParallelepiped(d.columns(b.indices), IntVec(d.r(), Int(0)));
}

OrientedParallelepiped p2(const StandardRepMatrix& d, const Basis& b) {
    return OrientedParallelepiped(d.dual_columns(d.complement(b)),
                                  IntVec(d.n() - d.r(), Int(0)));
}

OrientedParallelepiped p_full(const StandardRepMatrix& d, const Basis& b) {
    const std::size_t r = d.r(), n = d.n();
    IntMat full = d.full_matrix();
    IntMat gens(n, n);
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
        bool in_b = k < b.indices.size() && b.indices[k] == static_cast<int>(j + 1);
        if (in_b) ++k;
        for (std::size_t i = 0; i < n; ++i) {
            bool keep = in_b ? i < r : i >= r;
            gens(i, j) = keep ? full(i, j) : Int(0);
        }
    }
    return OrientedParallelepiped(std::move(gens), IntVec(n, Int(0)));
}

ShiftingVector validate_shifting(const StandardRepMatrix& d, const RatVec& w_full) {
    if (w_full.size() != d.n())
        throw dimension_error("shifting vector must have length n");
    ShiftingVector w;
    w.w.assign(w_full.begin(), w_full.begin() + d.r());
    w.w_hat.assign(w_full.begin() + d.r(), w_full.end());
    for (const auto& e : d.enumerate_bases()) {
        try {
            p1(d, e.basis).oriented_by(w.w);
        } catch (const validation_error&) {
            throw validation_error("first block lies in a facet span of P1(" +
                                   basis_label(e.basis) + ")");
        }
        try {
            p2(d, e.basis).oriented_by(w.w_hat);
        } catch (const validation_error&) {
            throw validation_error("second block lies in a facet span of P2(" +
                                   basis_label(e.basis) + ")");
        }
    }
    return w;
}

Int Multijection::group_order() const {
    Int total = 0;
    for (const auto& [b, pts] : fibers) total += Int(pts.size());
    return total;
}

const std::vector<IntVec>& Multijection::fiber(const Basis& b) const {
    for (const auto& [basis, pts] : fibers)
        if (basis == b) return pts;
    throw validation_error("no fiber for basis " + basis_label(b));
}

std::pair<Basis, IntVec> Multijection::apply(const SandpileLattice& lat,
                                             const IntVec& z) const {
    auto it = class_index.find(lat.canonical(z));
    if (it == class_index.end())
        throw std::logic_error("class index does not cover the sandpile group");
    return {fibers[it->second.first].first, it->second.second};
}

Multijection w_representatives(const StandardRepMatrix& d, const ShiftingVector& w) {
    SandpileLattice lat(d);
    Multijection f;
    f.shifting = w;
    for (const auto& e : d.enumerate_bases()) {
        auto pts1 = p1(d, e.basis).oriented_by(w.w).integer_points();
        auto pts2 = p2(d, e.basis).oriented_by(w.w_hat).integer_points();
        std::vector<IntVec> fiber;
        fiber.reserve(pts1.size() * pts2.size());
        for (const auto& v : pts1)
            for (const auto& vh : pts2) {
                IntVec z = v;
                z.insert(z.end(), vh.begin(), vh.end());
                fiber.push_back(std::move(z));
            }
        std::sort(fiber.begin(), fiber.end());
        Int expected = e.multiplicity * e.multiplicity;
        if (Int(fiber.size()) != expected)
            throw std::logic_error("fiber of " + basis_label(e.basis) +
                                   " has wrong size");
        f.fibers.emplace_back(e.basis, std::move(fiber));
    }
    for (std::size_t bi = 0; bi < f.fibers.size(); ++bi)
        for (const auto& z : f.fibers[bi].second) {
            auto [it, inserted] =
                f.class_index.emplace(lat.canonical(z), std::make_pair(bi, z));
            if (!inserted)
                throw std::logic_error("two representatives share a sandpile class");
        }
    if (Int(f.class_index.size()) != lat.group_order())
        throw std::logic_error("representatives do not cover the sandpile group");
    return f;
}

CornerPoint corner_point(const StandardRepMatrix& d, const Basis& b,
                         const ShiftingVector& w) {
    const std::size_t r = d.r(), n = d.n();
    auto comp = d.complement(b);
    IntMat cols_b = d.columns(b.indices);
    IntMat cols_bh = d.dual_columns(comp);
    RatVec a = OrientedParallelepiped(cols_b, IntVec(r, Int(0))).coefficients(w.w);
    RatVec a_hat =
        OrientedParallelepiped(cols_bh, IntVec(n - r, Int(0))).coefficients(w.w_hat);
    for (const auto& c : a)
        if (c == 0) throw validation_error("not a shifting vector for this basis");
    for (const auto& c : a_hat)
        if (c == 0) throw validation_error("not a shifting vector for this basis");

    // The w-associated corner takes coefficient 1 exactly on the generators
    // where w's coefficient is negative.
    CornerPoint cp;
    cp.basis = b;
    cp.point.assign(n, Int(0));
    cp.zero_one.assign(n, Int(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] < 0) {
            for (std::size_t row = 0; row < r; ++row) cp.point[row] += cols_b(row, i);
            cp.zero_one[b.indices[i] - 1] = 1;
        }
    }
    for (std::size_t i = 0; i < n - r; ++i) {
        if (a_hat[i] < 0) {
            for (std::size_t row = 0; row < n - r; ++row)
                cp.point[r + row] += cols_bh(row, i);
            cp.zero_one[comp[i] - 1] = 1;
        }
    }
    return cp;
}

std::vector<IntVec> p1_corner_points(const StandardRepMatrix& d, const Basis& b) {
    const std::size_t r = d.r();
    IntMat cols = d.columns(b.indices);
    std::vector<IntVec> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
        IntVec p(r, Int(0));
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::size_t(1) << i))
                for (std::size_t row = 0; row < r; ++row) p[row] += cols(row, i);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Basis> tile_membership(const StandardRepMatrix& d, const RatVec& p) {
    if (p.size() != d.n()) throw dimension_error("point length must be n");
    std::vector<Basis> out;
    for (const auto& e : d.enumerate_bases())
        if (p_full(d, e.basis).contains(p)) out.push_back(e.basis);
    return out;
}

}  // namespace sandtile
