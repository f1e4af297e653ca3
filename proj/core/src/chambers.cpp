#include "sandtile/chambers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sandtile {

namespace {

// Primitive normal of the span of k-1 columns in R^k via signed maximal
// minors; zero vector when the columns do not have rank k-1.
IntVec span_normal(const IntMat& cols, const std::vector<std::size_t>& pick) {
    const std::size_t k = cols.rows();
    IntVec normal(k);
    for (std::size_t drop = 0; drop < k; ++drop) {
        IntMat minor(k - 1, k - 1);
        std::size_t col = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == drop) continue;
            for (std::size_t j = 0; j + 1 < k; ++j) minor(col, j) = cols(i, pick[j]);
            ++col;
        }
        Int d = det(minor);
        normal[drop] = drop % 2 == 0 ? d : Int(-d);
    }
    Int g = 0;
    for (const auto& x : normal) g = gcd(g, x);
    if (g == 0) return {};
    for (auto& x : normal) x /= g;
    for (const auto& x : normal) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : normal) y = -y;
        break;
    }
    return normal;
}

}  // namespace

CentralArrangement arrangement(const IntMat& columns, std::size_t ambient_dim) {
    CentralArrangement a;
    a.ambient_dim = ambient_dim;
    if (ambient_dim == 0) return a;
    if (ambient_dim == 1) {
        // the empty set has rank 0 = k-1, so the origin is a hyperplane
        a.normals.push_back(IntVec{Int(1)});
        return a;
    }
    const std::size_t k = ambient_dim, m = columns.cols();
    if (columns.rows() != k) throw dimension_error("column length mismatch");
    if (m < k - 1) return a;
    std::set<IntVec> seen;
    std::vector<std::size_t> pick(k - 1);
    for (std::size_t i = 0; i < k - 1; ++i) pick[i] = i;
    while (true) {
        IntVec normal = span_normal(columns, pick);
        if (!normal.empty()) seen.insert(normal);
        std::size_t i = k - 1;
        while (i > 0 && pick[i - 1] == m - k + i) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    a.normals.assign(seen.begin(), seen.end());
    return a;
}

CentralArrangement arrangement_of(const StandardRepMatrix& d) {
    return arrangement(d.matrix(), d.r());
}

CentralArrangement arrangement_of_dual(const StandardRepMatrix& d) {
    return arrangement(d.dual_matrix(), d.n() - d.r());
}

ChamberSignature signature(const RatVec& v, const CentralArrangement& a) {
    if (v.size() != a.ambient_dim) throw dimension_error("vector length mismatch");
    ChamberSignature sig;
    for (const auto& normal : a.normals) {
        Rat dot(0);
        for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * Rat(normal[i]);
        int s = sgn(dot);
        if (s == 0) {
            std::ostringstream os;
            os << "vector lies on the hyperplane with normal (";
            for (std::size_t i = 0; i < normal.size(); ++i)
                os << (i ? "," : "") << normal[i];
            os << ")";
            throw validation_error(os.str());
        }
        sig.signs.push_back(s);
    }
    return sig;
}

bool shifting_equivalent(const StandardRepMatrix& d, const ShiftingVector& w,
                         const ShiftingVector& wp) {
    CentralArrangement hd = arrangement_of(d);
    CentralArrangement hdual = arrangement_of_dual(d);
    return signature(w.w, hd) == signature(wp.w, hd) &&
           signature(w.w_hat, hdual) == signature(wp.w_hat, hdual);
}

}  // namespace sandtile
