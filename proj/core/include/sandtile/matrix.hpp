#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sandtile/exact.hpp"

namespace sandtile {

// Dense row-major matrix over an exact scalar type.
template <typename T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw dimension_error("ragged initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Mat identity(std::size_t k) {
        Mat m(k, k);
        for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::vector<T> row(std::size_t i) const {
        return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
        Mat p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (cols_ != v.size()) throw dimension_error("matrix-vector shape mismatch");
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline RatMat to_rational(const IntMat& a) {
    RatMat q(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = Rat(a(i, j));
    return q;
}

inline RatVec to_rational(const IntVec& v) {
    RatVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

}  // namespace sandtile
