#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "diagcat/scalars.hpp"

namespace diagcat {

// Dense exact matrix, row-major. Immutable by convention once built.
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (const auto& x : row) entries_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return entries_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : entries_)
            if (x != 0) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix::add: shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix::sub: shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
        return r;
    }
    Matrix scaled(const T& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = c * entries_[i];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<T> row(std::size_t i) const {
        std::vector<T> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    Matrix columns_slice(std::size_t first, std::size_t count) const {
        Matrix m(rows_, count);
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, first + j);
        return m;
    }

    Matrix hstack(const Matrix& o) const {
        if (o.rows_ != rows_ && o.cols_ != 0 && cols_ != 0)
            throw std::invalid_argument("hstack: row mismatch");
        std::size_t rr = cols_ ? rows_ : o.rows_;
        Matrix m(rr, cols_ + o.cols_);
        for (std::size_t i = 0; i < rr; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
        }
        return m;
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
        return m;
    }

    // Row-major flattening; the convention used everywhere a matrix
    // becomes a vector of unknowns.
    std::vector<T> vectorized() const { return entries_; }

  private:
    std::size_t rows_, cols_;
    std::vector<T> entries_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

inline RatMat to_rational(const IntMat& a) {
    std::vector<Rat> e(a.entries().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = Rat(a.entries()[i]);
    return RatMat(a.rows(), a.cols(), std::move(e));
}

// Requires every entry integral.
inline IntMat to_integral(const RatMat& a) {
    std::vector<Int> e(a.entries().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = to_int(a.entries()[i]);
    return IntMat(a.rows(), a.cols(), std::move(e));
}

// Scale columns-wise by the lcm of denominators; returns an integer matrix
// with the same column span over Q.
inline IntMat clear_denominators(const RatMat& a) {
    Int l = 1;
    for (const auto& x : a.entries())
        l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(x)));
    std::vector<Int> e(a.entries().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = to_int(Rat(a.entries()[i] * l));
    return IntMat(a.rows(), a.cols(), std::move(e));
}

}  // namespace diagcat
