#include <random>

#include <gtest/gtest.h>

#include "nilcontact/linalg.hpp"

using namespace nilcontact;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Rational q(d(rng), 1 + std::abs(d(rng)) % 3);
            q.canonicalize();
            m(i, j) = q;
        }
    return m;
}

/// Rank by brute force: largest k with a nonzero k x k minor (cofactor expansion).
Rational det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != j) minor(i - 1, kk++) = m(i, k);
        s += ((j % 2) ? -1 : 1) * m(0, j) * det(minor);
    }
    return s;
}

std::size_t rank_by_minors(const Matrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    for (std::size_t k = std::min(r, c); k > 0; --k) {
        for (unsigned rm = 0; rm < (1u << r); ++rm) {
            if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
            for (unsigned cm = 0; cm < (1u << c); ++cm) {
                if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
                Matrix sub(k, k);
                for (std::size_t i = 0, si = 0; i < r; ++i) {
                    if (!(rm & (1u << i))) continue;
                    for (std::size_t j = 0, sj = 0; j < c; ++j)
                        if (cm & (1u << j)) sub(si, sj++) = m(i, j);
                    ++si;
                }
                if (det(sub) != 0) return k;
            }
        }
    }
    return 0;
}

} // namespace

TEST(Linalg, RankMatchesMinorsOnRandomLowRankMatrices) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4, inner = 1 + trial % 3;
        const Matrix m = random_matrix(rng, r, inner, -2, 2) * random_matrix(rng, inner, c, -2, 2);
        EXPECT_EQ(rank(m), rank_by_minors(m));
    }
}

TEST(Linalg, NullspaceIsKernelOfFullDimension) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = random_matrix(rng, 3, 5, -1, 1);
        const auto ns = nullspace(m);
        EXPECT_EQ(ns.size() + rank(m), m.cols());
        for (const auto& v : ns) {
            const Matrix col = Matrix::from_columns({v}, m.cols());
            EXPECT_TRUE((m * col).is_zero());
        }
    }
}

TEST(Linalg, InverseAndSolve) {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = random_matrix(rng, 4, 4, -3, 3);
        const auto inv = inverse(m);
        ASSERT_EQ(inv.has_value(), rank(m) == 4);
        if (!inv) continue;
        ++checked;
        EXPECT_EQ(m * *inv, Matrix::identity(4));
        const Vector b{1, 2, 3, 4};
        const auto x = solve(m, b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ((m * Matrix::from_columns({*x}, 4)).column(0), b);
    }
    EXPECT_GT(checked, 20);
}

TEST(Linalg, SolveReportsInconsistentSystem) {
    const Matrix m = Matrix::from_rows({{1, 1}, {2, 2}}, 2);
    EXPECT_FALSE(solve(m, Vector{1, 3}).has_value());
    EXPECT_TRUE(solve(m, Vector{1, 2}).has_value());
}

TEST(Linalg, PrimitiveIntegerScaling) {
    EXPECT_EQ(primitive_integer(Vector{Rational(1, 2), Rational(-3, 4), 0}), (Vector{2, -3, 0}));
    EXPECT_EQ(primitive_integer(Vector{6, 4}), (Vector{3, 2}));
    EXPECT_EQ(primitive_integer(Vector{0, -5}), (Vector{0, -1}));
}

TEST(Linalg, TraceAndCommutator) {
    const Matrix x = Matrix::from_rows({{0, 1}, {0, 0}}, 2);
    const Matrix y = Matrix::from_rows({{0, 0}, {1, 0}}, 2);
    EXPECT_EQ(commutator(x, y), Matrix::from_rows({{1, 0}, {0, -1}}, 2));
    EXPECT_EQ(commutator(x, y).trace(), 0);
}
