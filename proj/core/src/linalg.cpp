#include "sandtile/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace sandtile {

Int det(const IntMat& a) {
    if (a.rows() != a.cols()) throw dimension_error("det: matrix not square");
    const std::size_t k = a.rows();
    if (k == 0) return 1;
    IntMat m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (m(p, p) == 0) {
            std::size_t q = p + 1;
            while (q < k && m(q, p) == 0) ++q;
            if (q == k) return 0;
            for (std::size_t j = p; j < k; ++j) std::swap(m(p, j), m(q, j));
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                Int t = m(p, p) * m(i, j) - m(i, p) * m(p, j);
                // Bareiss: division is exact
                m(i, j) = t / prev;
            }
            m(i, p) = 0;
        }
        prev = m(p, p);
    }
    return sign > 0 ? m(k - 1, k - 1) : Int(-m(k - 1, k - 1));
}

Rat det(const RatMat& a) {
    if (a.rows() != a.cols()) throw dimension_error("det: matrix not square");
    const std::size_t k = a.rows();
    RatMat m = a;
    Rat d(1);
    for (std::size_t p = 0; p < k; ++p) {
        std::size_t q = p;
        while (q < k && m(q, p) == 0) ++q;
        if (q == k) return Rat(0);
        if (q != p) {
            for (std::size_t j = p; j < k; ++j) std::swap(m(p, j), m(q, j));
            d = -d;
        }
        d *= m(p, p);
        for (std::size_t i = p + 1; i < k; ++i) {
            if (m(i, p) == 0) continue;
            Rat f = m(i, p) / m(p, p);
            for (std::size_t j = p; j < k; ++j) m(i, j) -= f * m(p, j);
        }
    }
    return d;
}

RatVec solve(const RatMat& a, const RatVec& b) {
    if (a.rows() != a.cols()) throw dimension_error("solve: matrix not square");
    if (a.rows() != b.size()) throw dimension_error("solve: rhs length mismatch");
    const std::size_t k = a.rows();
    RatMat m = a;
    RatVec x = b;
    for (std::size_t p = 0; p < k; ++p) {
        std::size_t q = p;
        while (q < k && m(q, p) == 0) ++q;
        if (q == k) throw singular_error("solve: singular matrix");
        if (q != p) {
            for (std::size_t j = p; j < k; ++j) std::swap(m(p, j), m(q, j));
            std::swap(x[p], x[q]);
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (i == p || m(i, p) == 0) continue;
            Rat f = m(i, p) / m(p, p);
            for (std::size_t j = p; j < k; ++j) m(i, j) -= f * m(p, j);
            x[i] -= f * x[p];
        }
    }
    for (std::size_t i = 0; i < k; ++i) x[i] /= m(i, i);
    return x;
}

IntMat hnf_row(const IntMat& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    IntMat m = a;
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // gcd-reduce the column below pivot_row to a single nonzero entry
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = pivot_row; i < rows; ++i) {
                if (m(i, col) == 0) continue;
                if (best == rows || Int(abs(m(i, col))) < Int(abs(m(best, col)))) best = i;
            }
            if (best == rows) break;
            if (best != pivot_row)
                for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot_row, j), m(best, j));
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < rows; ++i) {
                if (m(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(pivot_row, col).get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(pivot_row, j);
                if (m(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m(pivot_row, col) == 0) continue;
        if (m(pivot_row, col) < 0)
            for (std::size_t j = 0; j < cols; ++j) m(pivot_row, j) = -m(pivot_row, j);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(pivot_row, col).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(pivot_row, j);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    IntMat h(pivot_row, cols);
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < cols; ++j) h(i, j) = m(i, j);
    return h;
}

std::size_t rank(const RatMat& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    RatMat m = a;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t q = r;
        while (q < rows && m(q, col) == 0) ++q;
        if (q == rows) continue;
        if (q != r)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(r, j), m(q, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMat& a) { return rank(to_rational(a)); }

IntMat adjugate(const IntMat& a) {
    if (a.rows() != a.cols()) throw dimension_error("adjugate: matrix not square");
    const std::size_t k = a.rows();
    Int d = det(a);
    if (d == 0) throw singular_error("adjugate: singular matrix");
    if (k == 0) return IntMat(0, 0);
    // adj(A) = det(A) * A^{-1}; entries are integral
    RatMat ra = to_rational(a);
    IntMat adj(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        RatVec e(k);
        e[j] = 1;
        RatVec x = solve(ra, e);
        for (std::size_t i = 0; i < k; ++i) {
            Rat v = x[i] * Rat(d);
            adj(i, j) = v.get_num();
        }
    }
    return adj;
}

}  // namespace sandtile
