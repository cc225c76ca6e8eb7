#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cyclowalk/rational.hpp"

namespace cyclowalk {

/// Dense row-major rational matrix, only what exact elimination needs.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Solves A·y = b exactly by Gauss-Jordan elimination with full pivoting.
/// Returns nullopt when the system is inconsistent. Free variables (only
/// present when A is rank deficient) are set to zero.
inline std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t m = a.rows, n = a.cols;
    std::vector<std::size_t> col_of(n);
    std::iota(col_of.begin(), col_of.end(), 0);

    std::size_t rank = 0;
    for (; rank < std::min(m, n); ++rank) {
        std::size_t pr = m, pc = n;
        for (std::size_t j = rank; j < n && pr == m; ++j)
            for (std::size_t i = rank; i < m; ++i)
                if (sgn(a(i, j)) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == m) break;
        if (pr != rank) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pr, j), a(rank, j));
            std::swap(b[pr], b[rank]);
        }
        if (pc != rank) {
            for (std::size_t i = 0; i < m; ++i) std::swap(a(i, pc), a(i, rank));
            std::swap(col_of[pc], col_of[rank]);
        }
        const Rational inv = 1 / a(rank, rank);
        for (std::size_t j = rank; j < n; ++j) a(rank, j) *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || sgn(a(i, rank)) == 0) continue;
            const Rational f = a(i, rank);
            for (std::size_t j = rank; j < n; ++j) a(i, j) -= f * a(rank, j);
            b[i] -= f * b[rank];
        }
    }
    for (std::size_t i = rank; i < m; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;

    std::vector<Rational> y(n);
    for (std::size_t r = 0; r < rank; ++r) y[col_of[r]] = b[r];
    return y;
}

}  // namespace cyclowalk
