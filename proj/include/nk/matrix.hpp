#ifndef NK_MATRIX_HPP
#define NK_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nk/errors.hpp"
#include "nk/numeric.hpp"
#include "nk/polynomial.hpp"

namespace nk {

template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, T(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] - o.d_[i];
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = -d_[i];
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> d_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

inline QMat to_rational(const IMat& m) {
    QMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(QMat& m);

inline std::size_t rank(QMat m) { return rref(m).size(); }

// Canonical kernel basis: one vector per free column of the RREF, in
// ascending free-column order, with entry 1 at the free column and the
// negated RREF column above the pivots.
std::vector<std::vector<Rat>> kernel_basis(const QMat& m);

// Unique reduced echelon basis of the span of the given vectors.
std::vector<std::vector<Rat>> echelon_basis(const std::vector<std::vector<Rat>>& vecs);

// Characteristic polynomial det(tI - m), monic, by Faddeev-LeVerrier.
IntPoly char_poly(const IMat& m);
std::vector<Rat> char_poly(const QMat& m);

// Inertia (positive, negative) of a nondegenerate symmetric matrix.
std::pair<int, int> signature(const QMat& q);

} // namespace nk

#endif
