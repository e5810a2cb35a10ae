#pragma once

#include "prymlab/rational.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace prymlab {

// Dense matrix over an exact coefficient type (Int or Rat).
template <typename T> class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(size_t rows, size_t cols, const T &fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto &row : init) {
            assert(row.size() == cols_);
            for (const auto &v : row) data_.push_back(v);
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T &operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix &o) const { return !(*this == o); }

    Matrix operator+(const Matrix &o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix &o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }
    Matrix operator*(const Matrix &o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T &a = (*this)(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix operator*(const T &s) const {
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
        return r;
    }

    std::vector<T> apply(const std::vector<T> &v) const {
        assert(v.size() == cols_);
        std::vector<T> r(rows_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        assert(rows_ == cols_);
        T t(0);
        for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != T(i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto &v : data_)
            if (v != 0) return false;
        return true;
    }

    void swap_rows(size_t a, size_t b) {
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    std::vector<T> row(size_t i) const {
        std::vector<T> r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> r(rows_);
        for (size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using QMat = Matrix<Rat>;
using ZMat = Matrix<Int>;

inline QMat to_rational(const ZMat &m) {
    QMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Fails if any entry has a nontrivial denominator.
inline ZMat to_integer(const QMat &m) {
    ZMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            Rat v = m(i, j);
            v.canonicalize();
            if (v.get_den() != 1) throw std::domain_error("matrix entry is not integral");
            r(i, j) = v.get_num();
        }
    return r;
}

} // namespace prymlab
