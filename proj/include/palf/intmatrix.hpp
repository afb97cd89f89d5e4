#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "palf/rational.hpp"

namespace palf {

/// Dense matrix over arbitrary-precision integers.  Sized for the handful
/// of rows a handle diagram produces; no attempt at sparsity.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Diagonal of the Smith normal form: d_1 | d_2 | ... | d_r, all positive,
/// one entry per nonzero invariant factor.  Row/column operations over Z
/// only.
inline std::vector<Int> smith_diagonal(IntMatrix m) {
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < m.rows && t < m.cols) {
        // Find a nonzero pivot of minimal absolute value in the submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best(0);
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j) {
                const Int& v = m.at(i, j);
                if (v == 0) continue;
                Int av = v < 0 ? Int(-v) : v;
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
        for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

        bool clean = true;
        for (std::size_t i = t + 1; i < m.rows && clean; ++i)
            if (m.at(i, t) != 0) clean = false;
        for (std::size_t j = t + 1; j < m.cols && clean; ++j)
            if (m.at(t, j) != 0) clean = false;

        if (!clean) {
            const Int p = m.at(t, t);
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / p;
                if (q != 0)
                    for (std::size_t j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / p;
                if (q != 0)
                    for (std::size_t i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
            }
            continue;  // re-select the pivot; remainders shrank strictly
        }
        Int d = m.at(t, t);
        diag.push_back(d < 0 ? Int(-d) : d);
        ++t;
    }

    // Enforce the divisibility chain by absorbing gcds leftwards.
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] == 0) continue;
            Int g = boost::multiprecision::gcd(diag[i], diag[j]);
            Int l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

inline std::size_t rank(const IntMatrix& m) { return smith_diagonal(m).size(); }

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows;
    if (n == 0) return Int(1);
    Int sign(1);
    Int prev(1);
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (m.at(t, t) == 0) {
            std::size_t swap_row = t + 1;
            while (swap_row < n && m.at(swap_row, t) == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j)) / prev;
        prev = m.at(t, t);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace palf
