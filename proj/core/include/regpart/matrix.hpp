#pragma once

#include "regpart/numeric.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regpart {

/// Dense row-major matrix over an exact coefficient ring.
///
/// Coefficient types need +, -, *, unary -, == and a free is_zero(); division
/// is needed only by the field algorithms (determinant, inverse).
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n, const T& zero, const T& one)
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = one;
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const
    {
        if (data_.empty()) {
            return from_data(cols_, rows_, {});
        }
        Matrix out(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    template <typename F>
    auto map(F&& fn) const -> Matrix<decltype(fn(std::declval<const T&>()))>
    {
        using U = decltype(fn(std::declval<const T&>()));
        std::vector<U> values;
        values.reserve(data_.size());
        for (const auto& x : data_) {
            values.push_back(fn(x));
        }
        return Matrix<U>::from_data(rows_, cols_, std::move(values));
    }

    static Matrix from_data(std::size_t rows, std::size_t cols, std::vector<T> data)
    {
        if (data.size() != rows * cols) {
            throw std::invalid_argument("matrix data size mismatch");
        }
        Matrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.data_ = std::move(data);
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    template <typename>
    friend class Matrix;
    Matrix() = default;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Product; `zero` seeds the accumulators.
template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix dimensions do not conform");
    }
    Matrix<T> out(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) = out(i, j) + a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

/// Fraction-free (Bareiss) determinant. Every intermediate division is exact,
/// so this also works over integral domains with exact division.
template <typename T>
T determinant(Matrix<T> m, const T& one)
{
    if (!m.square()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return one;
    }
    bool negate = false;
    T previous = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t pivot = k + 1;
            while (pivot < n && is_zero(m(pivot, k))) {
                ++pivot;
            }
            if (pivot == n) {
                return one - one;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            }
        }
        previous = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Gauss-Jordan inverse over a field. Throws std::domain_error when singular.
template <typename T>
Matrix<T> inverse(Matrix<T> m, const T& zero, const T& one)
{
    if (!m.square()) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix<T> inv = Matrix<T>::identity(n, zero, one);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m(pivot, k))) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::domain_error("matrix is singular");
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const T scale = one / m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = m(k, j) * scale;
            inv(k, j) = inv(k, j) * scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) {
                continue;
            }
            const T factor = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - factor * m(k, j);
                inv(i, j) = inv(i, j) - factor * inv(k, j);
            }
        }
    }
    return inv;
}

template <typename T>
bool is_upper_unitriangular(const Matrix<T>& m, const T& one)
{
    if (!m.square()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!(m(i, i) == one)) {
            return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!is_zero(m(i, j))) {
                return false;
            }
        }
    }
    return true;
}

template <typename T>
bool is_lower_unitriangular(const Matrix<T>& m, const T& one)
{
    return m.square() && is_upper_unitriangular(m.transposed(), one);
}

/// Inverse of an upper unitriangular matrix by back substitution; needs only
/// ring operations, so it stays inside polynomial rings.
template <typename T>
Matrix<T> inverse_upper_unitriangular(const Matrix<T>& m, const T& zero, const T& one)
{
    if (!is_upper_unitriangular(m, one)) {
        throw std::invalid_argument("matrix is not upper unitriangular");
    }
    const std::size_t n = m.rows();
    Matrix<T> inv = Matrix<T>::identity(n, zero, one);
    // Column j of the inverse: solve m * x = e_j from the bottom up.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j; i-- > 0;) {
            T acc = zero;
            for (std::size_t k = i + 1; k <= j; ++k) {
                if (!is_zero(m(i, k))) {
                    acc = acc + m(i, k) * inv(k, j);
                }
            }
            inv(i, j) = -acc;
        }
    }
    return inv;
}

} // namespace regpart
