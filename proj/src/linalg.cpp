#include "coconvex/linalg.hpp"

#include <utility>

namespace coconvex {

RatMatrix to_rational(const std::vector<std::vector<Integer>>& rows) {
    RatMatrix out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        RatVector v;
        v.reserve(r.size());
        for (const auto& x : r) v.emplace_back(x);
        out.push_back(std::move(v));
    }
    return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// In-place reduction to row echelon form. Returns pivot columns in row order.
std::vector<std::size_t> echelonize(RatMatrix& m, bool reduced) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = reduced ? 0 : row + 1; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) { return echelonize(m, false).size(); }

Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<RatVector> solve(RatMatrix a, RatVector b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = echelonize(a, true);
    if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::vector<RatVector> nullspace(RatMatrix m, std::size_t cols) {
    auto pivots = echelonize(m, true);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> independent_rows(const RatMatrix& m) {
    std::vector<std::size_t> chosen;
    RatMatrix acc;
    for (std::size_t i = 0; i < m.size(); ++i) {
        acc.push_back(m[i]);
        if (rank(acc) == acc.size()) {
            chosen.push_back(i);
        } else {
            acc.pop_back();
        }
    }
    return chosen;
}

}  // namespace coconvex
