#pragma once

#include "projmp/fields.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace projmp {

/// Dense row-major matrix over an exact field. The involution is the
/// entrywise-conjugate transpose.
template <class Field>
class Matrix {
public:
    using field_type = Field;
    using value_type = typename Field::value_type;

    Matrix() = default;

    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<value_type> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix data size does not match shape");
    }

    static Matrix identity(const Field& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = field.one();
        return m;
    }

    static Matrix diagonal(const Field& field, const std::vector<value_type>& d) {
        Matrix m(field, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    /// Builds a matrix from integer entries, e.g. `Matrix::from_ints(f, {{1, 0}, {0, 0}})`.
    static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c)
                throw std::invalid_argument("ragged initializer");
            std::size_t j = 0;
            for (long long v : row)
                m(i, j++) = field.from_int(v);
            ++i;
        }
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::vector<value_type>& data() const { return data_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!field_.is_zero(v))
                return false;
        return true;
    }

    Matrix star() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = field_.conj((*this)(i, j));
        return t;
    }

    Matrix scaled(const value_type& s) const {
        Matrix m = *this;
        for (auto& v : m.data_)
            v = field_.mul(s, v);
        return m;
    }

    Matrix columns(const std::vector<std::size_t>& idx) const {
        Matrix m(field_, rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < idx.size(); ++k)
                m(i, k) = (*this)(i, idx[k]);
        return m;
    }

    Matrix top_rows(std::size_t r) const {
        Matrix m(field_, r, cols_);
        std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), m.data_.begin());
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix m(a.field_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            m.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix m(a.field_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            m.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
        return m;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix m(a.field_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            m.data_[k] = a.field_.neg(a.data_[k]);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        const Field& f = a.field_;
        Matrix m(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const value_type& aik = a(i, k);
                if (f.is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    m(i, j) = f.add(m(i, j), f.mul(aik, b(k, j)));
            }
        return m;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    Field field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

template <class Field>
Matrix<Field> power(const Matrix<Field>& a, std::size_t k) {
    Matrix<Field> r = Matrix<Field>::identity(a.field(), a.rows());
    for (std::size_t i = 0; i < k; ++i)
        r = r * a;
    return r;
}

template <class Field>
struct RrefResult {
    Matrix<Field> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class Field>
RrefResult<Field> rref(Matrix<Field> a) {
    const Field& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && f.is_zero(a(sel, col)))
            ++sel;
        if (sel == a.rows())
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(sel, j), a(row, j));
        auto inv = f.inv(a(row, col));
        for (std::size_t j = col; j < a.cols(); ++j)
            a(row, j) = f.mul(inv, a(row, j));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || f.is_zero(a(i, col)))
                continue;
            auto factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Matrix<Field>& a) {
    return rref(a).rank;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class Field>
std::optional<Matrix<Field>> inverse(const Matrix<Field>& a) {
    if (!a.square())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    const Field& f = a.field();
    Matrix<Field> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = f.one();
    }
    auto r = rref(std::move(aug));
    if (r.rank < n || r.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix<Field> inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r.reduced(i, n + j);
    return inv;
}

/// Basis of the null space, one column per free variable.
template <class Field>
Matrix<Field> null_space(const Matrix<Field>& a) {
    const Field& f = a.field();
    auto r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j])
            free.push_back(j);
    Matrix<Field> basis(f, a.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = f.one();
        for (std::size_t i = 0; i < r.rank; ++i)
            basis(r.pivots[i], k) = f.neg(r.reduced(i, free[k]));
    }
    return basis;
}

/// Horizontal concatenation [a | b].
template <class Field>
Matrix<Field> hconcat(const Matrix<Field>& a, const Matrix<Field>& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hconcat row mismatch");
    Matrix<Field> m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

/// True when the column spaces of a and b coincide.
template <class Field>
bool same_column_space(const Matrix<Field>& a, const Matrix<Field>& b) {
    std::size_t ra = rank(a);
    return ra == rank(b) && rank(hconcat(a, b)) == ra;
}

} // namespace projmp
