#pragma once

// Dense exact linear algebra over arbitrary-precision rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "nilcontact/error.hpp"

namespace nilcontact {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    /// Row-major flattening; used to view an n x n matrix as a vector of length n^2.
    const std::vector<Rational>& flat() const noexcept { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Rational trace() const {
        Rational t = 0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const Rational& s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    assert(a.size() == b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Rank by fraction-free (Bareiss) elimination. Rows are first cleared of
/// denominators so that every intermediate value stays an integer.
inline std::size_t rank(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < C && r < R; ++col) {
        std::size_t piv = r;
        while (piv < R && a[piv][col] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q.
inline RowEchelon rref(Matrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < C && r < R; ++col) {
        std::size_t piv = r;
        while (piv < R && m(piv, col) == 0) ++piv;
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
        const Rational inv = 1 / m(r, col);
        for (std::size_t j = col; j < C; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < C; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vector> nullspace(const Matrix& m) {
    const auto [red, pivots] = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        Vector v(C);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Indices of a maximal linearly independent subset of the columns (leftmost first).
inline std::vector<std::size_t> independent_columns(const Matrix& m) { return rref(m).pivots; }

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto [red, pivots] = rref(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

/// Some solution of m x = b, if one exists.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    const std::size_t R = m.rows(), C = m.cols();
    Matrix aug(R, C + 1);
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
        aug(i, C) = b[i];
    }
    const auto [red, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == C) return std::nullopt;
    Vector x(C);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = red(k, C);
    return x;
}

/// Scales a nonzero rational vector to the unique primitive integer vector
/// on the same ray (positive multiple). The zero vector is returned as is.
inline Vector primitive_integer(const Vector& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    std::vector<Integer> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) return v;
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

inline bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

} // namespace nilcontact
