#ifndef EXTSHIFT_MATRIX_HPP
#define EXTSHIFT_MATRIX_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extshift {

/// Dense row-major matrix over a field or polynomial ring. Entry types carry
/// their ring, so the matrix keeps a zero of that ring for fills and products.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const T& zero) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = zero.one_like();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    T& at(std::size_t r, std::size_t c) {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
        return (*this)(r, c);
    }
    const T& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
        return (*this)(r, c);
    }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    /// Submatrix with the given rows and columns (in the given order).
    Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        Matrix m(rows.size(), cols.size(), zero_);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = at(rows[i], cols[j]);
        }
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix m(rows_, o.cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const T& b = o(k, j);
                    if (b.is_zero()) continue;
                    m(i, j) = m(i, j) + a * b;
                }
            }
        }
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// Applies f to every entry, producing a matrix over another ring.
    template <class Fn>
    auto map(Fn&& f, const decltype(f(std::declval<const T&>()))& zero) const {
        Matrix<decltype(f(std::declval<const T&>()))> m(rows_, cols_, zero);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        }
        return m;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < m.cols_; ++j) {
                if (j > 0) os << ", ";
                os << m(i, j);
            }
            os << "]\n";
        }
        return os;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    T zero_;
    std::vector<T> data_;
};

} // namespace extshift

#endif
