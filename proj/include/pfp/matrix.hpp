#pragma once

// Dense exact matrices over a field K (Rat, FieldElement, RationalFunction).

#include <cassert>
#include <vector>

#include "pfp/errors.hpp"
#include "pfp/poly.hpp"

namespace pfp {

template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, field_traits<K>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field_traits<K>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (field_traits<K>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) = c(i, j) + aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator*(const K& s, const Matrix& m) {
        Matrix c(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) c.a_[i] = s * m.a_[i];
        return c;
    }

    std::vector<K> apply(const std::vector<K>& x) const {
        assert(x.size() == cols_);
        std::vector<K> y(rows_, field_traits<K>::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] = y[i] + (*this)(i, j) * x[j];
        return y;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    K determinant() const {
        assert(rows_ == cols_);
        Matrix m = *this;
        K det = field_traits<K>::one();
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && field_traits<K>::is_zero(m(piv, col))) ++piv;
            if (piv == rows_) return field_traits<K>::zero();
            if (piv != col) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(col, j));
                det = -det;
            }
            det = det * m(col, col);
            const K inv = field_traits<K>::one() / m(col, col);
            for (std::size_t row = col + 1; row < rows_; ++row) {
                if (field_traits<K>::is_zero(m(row, col))) continue;
                const K f = m(row, col) * inv;
                for (std::size_t j = col; j < cols_; ++j) m(row, j) = m(row, j) - f * m(col, j);
            }
        }
        return det;
    }

    Matrix inverse() const {
        assert(rows_ == cols_);
        Matrix m = *this;
        Matrix inv = identity(rows_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && field_traits<K>::is_zero(m(piv, col))) ++piv;
            if (piv == rows_) throw SingularMatrix();
            if (piv != col)
                for (std::size_t j = 0; j < cols_; ++j) {
                    std::swap(m(piv, j), m(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            const K f = field_traits<K>::one() / m(col, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                m(col, j) = f * m(col, j);
                inv(col, j) = f * inv(col, j);
            }
            for (std::size_t row = 0; row < rows_; ++row) {
                if (row == col || field_traits<K>::is_zero(m(row, col))) continue;
                const K g = m(row, col);
                for (std::size_t j = 0; j < cols_; ++j) {
                    m(row, j) = m(row, j) - g * m(col, j);
                    inv(row, j) = inv(row, j) - g * inv(col, j);
                }
            }
        }
        return inv;
    }

    template <class K2, class F>
    Matrix<K2> map(F&& f) const {
        Matrix<K2> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    K trace() const {
        assert(rows_ == cols_);
        K t = field_traits<K>::zero();
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

// Kernel vector of a singular square matrix over a field (any nonzero
// solution of M x = 0), scaled so its first nonzero coordinate is one.
template <class K>
std::vector<K> kernel_vector(Matrix<K> m) {
    const std::size_t n = m.rows();
    std::vector<long> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && field_traits<K>::is_zero(m(piv, col))) ++piv;
        if (piv == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(rank, j));
        const K f = field_traits<K>::one() / m(rank, col);
        for (std::size_t j = 0; j < n; ++j) m(rank, j) = f * m(rank, j);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == rank || field_traits<K>::is_zero(m(row, col))) continue;
            const K g = m(row, col);
            for (std::size_t j = 0; j < n; ++j) m(row, j) = m(row, j) - g * m(rank, j);
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    if (rank == n) throw SingularMatrix();  // no kernel: matrix was regular
    // first free column
    std::size_t free_col = 0;
    while (pivot_of_col[free_col] >= 0) ++free_col;
    std::vector<K> x(n, field_traits<K>::zero());
    x[free_col] = field_traits<K>::one();
    for (std::size_t col = 0; col < n; ++col) {
        const long r = pivot_of_col[col];
        if (r >= 0) x[col] = -m(static_cast<std::size_t>(r), free_col);
    }
    // scale so the first nonzero coordinate is 1
    std::size_t first = 0;
    while (first < n && field_traits<K>::is_zero(x[first])) ++first;
    assert(first < n);
    const K f = field_traits<K>::one() / x[first];
    for (auto& v : x) v = f * v;
    return x;
}

}  // namespace pfp
