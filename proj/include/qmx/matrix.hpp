#pragma once

// Dense row-major matrices over an arbitrary coefficient ring. Zero-row and
// zero-column matrices are first-class values (the 0_{n0} / 0_{0n} blocks).

#include <vector>

#include "qmx/scalar.hpp"

namespace qmx {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int r, int c, T fill = T()) : rows_(r), cols_(c), a_((size_t)r * c, fill) {
        if (r < 0 || c < 0) fail("invalid-argument", "negative matrix dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = (int)rows.size();
        cols_ = rows_ ? (int)rows.begin()->size() : 0;
        a_.reserve((size_t)rows_ * cols_);
        for (auto& r : rows) {
            if ((int)r.size() != cols_) fail("invalid-argument", "ragged initializer");
            for (auto& x : r) a_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    T& at(int i, int j) { return a_[(size_t)i * cols_ + j]; }
    const T& at(int i, int j) const { return a_[(size_t)i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = -a.a_[k];
        return r;
    }
    friend Matrix operator*(const T& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = c * a.a_[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix submatrix(int r0, int c0, int nr, int nc) const {
        Matrix r(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
        return r;
    }

    void set_block(int r0, int c0, const Matrix& b) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
    }

    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            fail("invalid-argument", "matrix shape mismatch");
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

// [a | b]
template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) fail("invalid-argument", "hcat row mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

template <class T>
Matrix<T> vcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) fail("invalid-argument", "vcat col mismatch");
    Matrix<T> r(a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

template <class K>
Matrix<K> star_transpose(const Matrix<K>& a, Involution invol) {
    Matrix<K> r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(j, i) = involve(a.at(i, j), invol);
    return r;
}

template <class K>
Matrix<Cplx> matrix_to_cplx(const Matrix<K>& a) {
    Matrix<Cplx> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = to_cplx(a.at(i, j));
    return r;
}

}  // namespace qmx
