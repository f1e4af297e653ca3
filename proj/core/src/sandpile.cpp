#include "sandtile/sandpile.hpp"

namespace sandtile {

SandpileLattice::SandpileLattice(const StandardRepMatrix& d) : src_(d) {
    IntMat full = d.full_matrix();
    hnf_ = hnf_row(full);
    if (hnf_.rows() != d.n())
        throw singular_error("full matrix is not of full rank");
    full_t_ = to_rational(full.transpose());
}

Int SandpileLattice::group_order() const {
    Int p = 1;
    for (std::size_t i = 0; i < hnf_.rows(); ++i) p *= hnf_(i, i);
    return p;
}

bool SandpileLattice::equivalent(const IntVec& z, const IntVec& zp) const {
    const std::size_t n = src_.n();
    if (z.size() != n || zp.size() != n)
        throw dimension_error("equivalent: vector length mismatch");
    RatVec rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = Rat(z[i] - zp[i]);
    RatVec x = solve(full_t_, rhs);
    for (const auto& c : x)
        if (!is_integral(c)) return false;
    return true;
}

SandpileClass SandpileLattice::canonical(const IntVec& z) const {
    const std::size_t n = src_.n();
    if (z.size() != n) throw dimension_error("canonical: vector length mismatch");
    IntVec v = z;
    for (std::size_t i = 0; i < n; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), hnf_(i, i).get_mpz_t());
        if (q == 0) continue;
        for (std::size_t j = i; j < n; ++j) v[j] -= q * hnf_(i, j);
    }
    return SandpileClass{std::move(v)};
}

std::vector<SandpileClass> SandpileLattice::enumerate_classes(const Int& budget) const {
    Int order = group_order();
    if (order > budget) throw size_error("group order " + order.get_str() +
                                         " exceeds enumeration budget");
    const std::size_t n = src_.n();
    std::vector<SandpileClass> out;
    out.reserve(order.get_ui());
    IntVec v(n, Int(0));
    while (true) {
        out.push_back(SandpileClass{v});
        std::size_t i = n;
        while (i > 0) {
            --i;
            v[i] += 1;
            if (v[i] < hnf_(i, i)) break;
            v[i] = 0;
            if (i == 0) return out;
        }
    }
}

}  // namespace sandtile
