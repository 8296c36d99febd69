#pragma once

/// Exact linear algebra over Z and Q for small dense matrices: Bareiss
/// determinants, rank, inertia of symmetric forms by rational congruence
/// elimination, and Smith normal form.

#include "k3fib/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace k3fib {

using IMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

inline std::size_t rows(const IMat& m) { return m.size(); }
inline std::size_t cols(const IMat& m) { return m.empty() ? 0 : m[0].size(); }

/// Fraction-free Gaussian elimination (Bareiss); square matrices.
inline Int det_bareiss(IMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("det of non-square matrix");
    if (n == 0) return Int(1);
    Int sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline int rank_of(QMat m) {
    if (m.empty()) return 0;
    const std::size_t nr = m.size(), nc = m[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < nc && static_cast<std::size_t>(rank) < nr; ++col) {
        std::size_t pr = nr;
        for (std::size_t r = static_cast<std::size_t>(rank); r < nr; ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr == nr) continue;
        std::swap(m[pr], m[static_cast<std::size_t>(rank)]);
        const auto& prow = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][col] == 0) continue;
            Rat f = m[r][col] / prow[col];
            for (std::size_t c = col; c < nc; ++c) m[r][c] -= f * prow[c];
        }
        ++rank;
    }
    return rank;
}

inline int rank_of(const IMat& m) {
    QMat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i].assign(m[i].begin(), m[i].end());
    return rank_of(std::move(q));
}

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Sylvester inertia of a symmetric matrix by exact congruence elimination.
/// A zero diagonal with a nonzero off-diagonal entry is repaired by a
/// congruence row/column addition before pivoting.
inline Inertia inertia_of(QMat m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::domain_error("inertia of non-square matrix");
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw std::domain_error("inertia of non-symmetric matrix");
    }
    Inertia out;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && m[i][i] != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // all remaining diagonal entries vanish; find an off-diagonal
            // entry and fold it onto the diagonal
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[j] && m[i][j] != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            }
            if (a == n) break;  // remaining block is zero
            for (std::size_t k = 0; k < n; ++k) m[a][k] += m[b][k];
            for (std::size_t k = 0; k < n; ++k) m[k][a] += m[k][b];
            p = a;  // m[a][a] = 2*old_offdiag != 0 now
        }
        const Rat pivot = m[p][p];
        if (pivot > 0) ++out.positive;
        else ++out.negative;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || m[i][p] == 0) continue;
            Rat f = m[i][p] / pivot;
            for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[p][k];
            for (std::size_t k = 0; k < n; ++k) m[k][i] -= f * m[k][p];
        }
    }
    out.zero = static_cast<int>(n) - out.positive - out.negative;
    return out;
}

inline Inertia inertia_of(const IMat& m) {
    QMat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i].assign(m[i].begin(), m[i].end());
    return inertia_of(std::move(q));
}

/// Smith normal form: returns the diagonal entries d1 | d2 | ... (zeros at
/// the end for rank deficiency), all nonnegative.
inline std::vector<Int> smith_normal_form(IMat m) {
    const std::size_t nr = rows(m), nc = cols(m);
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < nr && t < nc) {
        // find a nonzero pivot in the submatrix
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr && pi == nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == nr) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][pj]);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                while (m[i][t] != 0) {
                    Int q = m[t][t] == 0 ? Int(0) : m[i][t] / m[t][t];
                    for (std::size_t j = t; j < nc; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) std::swap(m[t], m[i]);
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                while (m[t][j] != 0) {
                    Int q = m[t][t] == 0 ? Int(0) : m[t][j] / m[t][t];
                    for (std::size_t i = t; i < nr; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0) {
                        for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][j]);
                        again = true;  // column swap may disturb cleared rows
                    }
                }
            }
            if (again) continue;
            // divisibility fix-up: pivot must divide every remaining entry
            for (std::size_t i = t + 1; i < nr && !again; ++i)
                for (std::size_t j = t + 1; j < nc && !again; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < nc; ++k) m[t][k] += m[i][k];
                        again = true;
                    }
        }
        diag.push_back(abs_int(m[t][t]));
        ++t;
    }
    while (diag.size() < std::min(nr, nc)) diag.push_back(Int(0));
    return diag;
}

}  // namespace k3fib
