#include "sandtile/srm.hpp"

#include <numeric>

namespace sandtile {

StandardRepMatrix::StandardRepMatrix(std::size_t r, std::size_t n, IntMat m)
    : r_(r), n_(n), m_(std::move(m)) {
    if (r < 1) throw dimension_error("standard representative matrix needs r >= 1");
    if (n < r) throw dimension_error("standard representative matrix needs n >= r");
    if (m_.rows() != r || m_.cols() != n - r)
        throw dimension_error("M block must be r x (n-r)");
    d_ = IntMat(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        d_(i, i) = 1;
        for (std::size_t j = 0; j < n - r; ++j) d_(i, r + j) = m_(i, j);
    }
}

IntMat StandardRepMatrix::dual_matrix() const {
    const std::size_t k = n_ - r_;
    IntMat dhat(k, n_);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < r_; ++j) dhat(i, j) = -m_(j, i);
        dhat(i, r_ + i) = 1;
    }
    return dhat;
}

IntMat StandardRepMatrix::full_matrix() const {
    IntMat dhat = dual_matrix();
    IntMat full(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t i = 0; i < r_; ++i) full(i, j) = d_(i, j);
        for (std::size_t i = 0; i < n_ - r_; ++i) full(r_ + i, j) = dhat(i, j);
    }
    return full;
}

IntMat StandardRepMatrix::columns(const std::vector<int>& idx) const {
    IntMat c(r_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 1 || idx[j] > static_cast<int>(n_))
            throw dimension_error("column index out of range");
        for (std::size_t i = 0; i < r_; ++i) c(i, j) = d_(i, idx[j] - 1);
    }
    return c;
}

IntMat StandardRepMatrix::dual_columns(const std::vector<int>& idx) const {
    IntMat dhat = dual_matrix();
    IntMat c(n_ - r_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 1 || idx[j] > static_cast<int>(n_))
            throw dimension_error("column index out of range");
        for (std::size_t i = 0; i < n_ - r_; ++i) c(i, j) = dhat(i, idx[j] - 1);
    }
    return c;
}

std::vector<int> StandardRepMatrix::complement(const Basis& b) const {
    std::vector<int> out;
    std::size_t k = 0;
    for (int j = 1; j <= static_cast<int>(n_); ++j) {
        if (k < b.indices.size() && b.indices[k] == j) {
            ++k;
        } else {
            out.push_back(j);
        }
    }
    return out;
}

BasisTable StandardRepMatrix::enumerate_bases() const {
    BasisTable table;
    std::vector<int> idx(r_);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        Int d = det(columns(idx));
        if (d != 0) table.push_back({Basis{idx}, Int(abs(d))});
        // next lexicographic r-subset of [1, n]
        std::size_t i = r_;
        while (i > 0 && idx[i - 1] == static_cast<int>(n_ - r_ + i)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r_; ++j) idx[j] = idx[j - 1] + 1;
    }
    return table;
}

Int StandardRepMatrix::basis_multiplicity(const Basis& b) const {
    return Int(abs(det(columns(b.indices))));
}

MatrixTreeCheck matrix_tree_check(const StandardRepMatrix& d) {
    Int sum = 0;
    for (const auto& e : d.enumerate_bases()) sum += e.multiplicity * e.multiplicity;
    Int full = abs(det(d.full_matrix()));
    return {sum, full, sum == full};
}

}  // namespace sandtile
