#include "gca/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gca {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

}  // namespace

Rational det_exact(const RationalMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("det_exact: matrix must be square");
    }
    if (n == 0) return Rational(1);

    // Clear denominators row by row; det(M) = det(A) / prod(scales).
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer rowlcm(1);
        for (std::size_t j = 0; j < n; ++j) rowlcm = lcm(rowlcm, denominator(m[i][j]));
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = numerator(m[i][j]) * (rowlcm / denominator(m[i][j]));
        }
        scale *= rowlcm;
    }

    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1], scale);
    if (sign < 0) det = -det;
    return det;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols) {
    for (auto& row : m) {
        if (row.size() != cols) throw std::invalid_argument("nullspace: inconsistent row width");
    }
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            // Row i reads x[pivots[i]] + sum over free columns = 0.
            v[pivots[i]] = -m[i][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gca
