#pragma once

// Exact linear algebra over Q(v): Bareiss fraction-free rank over the Laurent
// ring, Gaussian elimination over the fraction field for nullspace/solve, and
// a numeric fast path that evaluates v at a random rational.

#include <random>
#include <vector>

#include "qdg/scalars.hpp"

namespace qdg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline Matrix<Laurent> clear_denominators(const Matrix<FieldScalar>& m) {
    Matrix<Laurent> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        Laurent lcm(1);
        for (auto& e : m[i])
            if (!e.den().is_one()) lcm = lcm * e.den();  // product suffices for exactness
        out[i].reserve(m[i].size());
        for (auto& e : m[i]) out[i].push_back(laurent_div_exact(e.num() * lcm, e.den()));
    }
    return out;
}

// Fraction-free Bareiss elimination; exact rank over the fraction field.
inline size_t rank_bareiss(Matrix<Laurent> m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    Laurent prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = laurent_div_exact(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = Laurent();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

inline size_t rank_exact(const Matrix<FieldScalar>& m) {
    return rank_bareiss(clear_denominators(m));
}

// Probabilistic rank: evaluate v at a random rational and take numeric (exact
// mpq) rank of the specialization.  Never overestimates; may underestimate
// with negligible probability for a random point.
inline size_t rank_numeric(const Matrix<FieldScalar>& m, uint64_t seed) {
    if (m.empty() || m[0].empty()) return 0;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(2, 1 << 20), den(1, 1 << 10);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        try {
            Matrix<Rational> e(m.size());
            for (size_t i = 0; i < m.size(); ++i)
                for (auto& f : m[i]) e[i].push_back(f.evaluate(x));
            size_t rows = e.size(), cols = e[0].size(), r = 0;
            for (size_t c = 0; c < cols && r < rows; ++c) {
                size_t piv = r;
                while (piv < rows && e[piv][c] == 0) ++piv;
                if (piv == rows) continue;
                std::swap(e[r], e[piv]);
                for (size_t i = r + 1; i < rows; ++i) {
                    if (e[i][c] == 0) continue;
                    Rational f = e[i][c] / e[r][c];
                    for (size_t j = c; j < cols; ++j) e[i][j] -= f * e[r][j];
                }
                ++r;
            }
            return r;
        } catch (const error&) {
            continue;  // hit a pole; retry with a fresh point
        }
    }
    throw error("rank_numeric: all evaluation points hit poles");
}

// Reduced row echelon form over Q(v); returns pivots (column indices).
inline std::vector<size_t> rref(Matrix<FieldScalar>& m) {
    std::vector<size_t> pivots;
    if (m.empty() || m[0].empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        FieldScalar inv = FieldScalar(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            FieldScalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of the right nullspace of m (solutions of m x = 0), one vector per
// free column.
inline Matrix<FieldScalar> nullspace(Matrix<FieldScalar> m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    Matrix<FieldScalar> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldScalar> x(cols, FieldScalar(0));
        x[free] = FieldScalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Solve m x = b; returns nullopt when inconsistent.  When underdetermined,
// free variables are set to zero.
inline std::optional<std::vector<FieldScalar>> solve(Matrix<FieldScalar> m,
                                                     const std::vector<FieldScalar>& b) {
    size_t rows = m.size();
    if (rows != b.size()) throw error("solve: dimension mismatch");
    size_t cols = rows ? m[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(m);
    std::vector<FieldScalar> x(cols, FieldScalar(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // 0 = 1 row
        x[pivots[r]] = m[r][cols];
    }
    return x;
}

}  // namespace qdg
