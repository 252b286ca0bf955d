#ifndef GWIDTH_LINALG_HPP
#define GWIDTH_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gwidth/rational.hpp"

namespace gwidth {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

// Plain Gaussian elimination with exact pivots. Matrices here never exceed a
// handful of rows, so no pivoting strategy beyond "first nonzero" is needed.

inline std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline Rational determinant(RationalMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

inline std::size_t matrix_rank(RationalMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Kernel generator of a k x (k+1) matrix via signed maximal minors (the
// generalized cross product). Returns the zero vector when rank < k.
inline RationalVector kernel_by_minors(const RationalMatrix& m) {
    const std::size_t k = m.size();
    const std::size_t cols = k + 1;
    RationalVector out(cols, Rational(0));
    for (std::size_t skip = 0; skip < cols; ++skip) {
        RationalMatrix sub(k, RationalVector(k));
        for (std::size_t r = 0; r < k; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < cols; ++c) {
                if (c == skip) continue;
                sub[r][cc++] = m[r][c];
            }
        }
        Rational d = determinant(std::move(sub));
        out[skip] = (skip % 2 == 0) ? d : -d;
    }
    return out;
}

// Nonzero vector in the nullspace of the full row set, if the rank is
// deficient; used to detect lineality (hence unboundedness).
inline std::optional<RationalVector> nullspace_vector(RationalMatrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank == cols) return std::nullopt;
    // pick the first free column, set it to 1, back-substitute the pivots
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    RationalVector x(cols, Rational(0));
    x[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t pc = pivot_col[r];
        x[pc] = -a[r][free_col] / a[r][pc];
    }
    return x;
}

namespace detail {

// Fraction-free integer kernels for the common case of small integral
// systems. Bounds are conservative; callers fall back to the rational path
// whenever the guards fail.
using Int128 = __int128;

inline bool fits_int64(Int128 v) {
    return v <= Int128(INT64_MAX) && v >= Int128(INT64_MIN);
}

inline Int128 int128_abs(Int128 v) { return v < 0 ? -v : v; }

inline Rational rational_from_int128(Int128 num, Int128 den) {
    auto to_big = [](Int128 v) {
        bool neg = v < 0;
        Int128 a = neg ? -v : v;
        std::uint64_t hi = static_cast<std::uint64_t>(a >> 64);
        std::uint64_t lo = static_cast<std::uint64_t>(a & ~std::uint64_t{0});
        BigInt b = BigInt(hi);
        b <<= 64;
        b += lo;
        return neg ? BigInt(-b) : b;
    };
    return Rational(to_big(num), to_big(den));
}

// Bareiss determinant; entries must stay within Int128 (guaranteed for the
// coefficient magnitudes accepted by the fast path).
inline Int128 bareiss_determinant(std::vector<std::vector<Int128>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int128 prev = 1;
    int sign = 1;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c < n; ++c) {
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

} // namespace detail

} // namespace gwidth

#endif // GWIDTH_LINALG_HPP
