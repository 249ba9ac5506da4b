/*
 * resultant.hpp
 * -------------
 * Exact integer resultants. Two independent engines:
 *
 *  - sylvester_resultant: Bareiss fraction-free elimination on the Sylvester
 *    matrix. Works for any pair, O((m+n)^3) big-integer operations; the
 *    reference engine and cross-check oracle.
 *
 *  - resultant_with_cyclotomic_power: Res(f, t^r - 1) through the scaled
 *    companion matrix B = a_n * C(f/a_n), using
 *        Res(f, t^r - 1) = a_n^r * prod_i (alpha_i^r - 1)
 *                        = det(B^r - a_n^r I) / a_n^{r(n-1)}.
 *    B is integral, the powering is O(n^3 log r) big-integer multiplies, and
 *    the final division is exact. This is what makes homology sweeps to
 *    r = 400+ cheap.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "adelex/int_poly.hpp"

namespace adelex {

namespace detail {

using Matrix = std::vector<std::vector<BigInt>>;

// Fraction-free determinant (Bareiss). Destroys its argument.
inline BigInt bareiss_determinant(Matrix m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace detail

/// Res(f, g) via the Sylvester matrix: deg(g) rows of f-shifts above deg(f)
/// rows of g-shifts, both in descending powers.
inline BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const int n = f.degree(), m = g.degree();
    if (n == 0) return boost::multiprecision::pow(f.leading(), static_cast<unsigned>(m));
    if (m == 0) {
        BigInt v = boost::multiprecision::pow(g.leading(), static_cast<unsigned>(n));
        return v;
    }
    const size_t dim = static_cast<size_t>(n + m);
    detail::Matrix s(dim, std::vector<BigInt>(dim, 0));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            s[static_cast<size_t>(row)][static_cast<size_t>(row + j)] =
                f.coeff(static_cast<size_t>(n - j));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            s[static_cast<size_t>(m + row)][static_cast<size_t>(row + j)] =
                g.coeff(static_cast<size_t>(m - j));
    return detail::bareiss_determinant(std::move(s));
}

namespace detail {

// Powers of the scaled companion matrix of f, B = a_n * C(f/a_n):
// subdiagonal entries a_n, last column -a_0..-a_{n-1}.
inline Matrix scaled_companion(const IntPoly& f) {
    const size_t n = static_cast<size_t>(f.degree());
    Matrix b(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i + 1 < n; ++i) b[i + 1][i] = f.leading();
    for (size_t i = 0; i < n; ++i) b[i][n - 1] = -f.coeff(i);
    return b;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const size_t n = a.size();
    Matrix c(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j] == 0) continue;
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    return c;
}

inline Matrix mat_identity(size_t n) {
    Matrix c(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) c[i][i] = 1;
    return c;
}

// det(Bpow - scale * I) / divisor, asserting exactness.
inline BigInt companion_resultant_from_power(const Matrix& bpow, const BigInt& scale,
                                             const BigInt& divisor) {
    Matrix m = bpow;
    for (size_t i = 0; i < m.size(); ++i) m[i][i] -= scale;
    BigInt det = bareiss_determinant(std::move(m));
    if (divisor == 1) return det;
    BigInt q, r;
    boost::multiprecision::divide_qr(det, divisor, q, r);
    if (r != 0)
        throw identity_violation("companion resultant division was not exact");
    return q;
}

}  // namespace detail

/// Res(f, t^r - 1), exact with sign. |result| equals the Fox product
/// |prod_{d=0}^{r-1} f(e^{2 pi i d / r})|.
inline BigInt resultant_with_cyclotomic_power(const IntPoly& f, int r) {
    if (r < 1) throw std::invalid_argument("resultant power r must be >= 1");
    const int n = f.degree();
    if (n == 0) return boost::multiprecision::pow(f.leading(), static_cast<unsigned>(r));
    detail::Matrix b = detail::scaled_companion(f);
    detail::Matrix acc = detail::mat_identity(static_cast<size_t>(n));
    detail::Matrix base = b;
    int e = r;
    while (e > 0) {  // binary powering
        if (e & 1) acc = detail::mat_mul(acc, base);
        e >>= 1;
        if (e > 0) base = detail::mat_mul(base, base);
    }
    const BigInt an_r = boost::multiprecision::pow(f.leading(), static_cast<unsigned>(r));
    const BigInt divisor =
        boost::multiprecision::pow(f.leading(), static_cast<unsigned>(r) * static_cast<unsigned>(n - 1));
    return detail::companion_resultant_from_power(acc, an_r, divisor);
}

}  // namespace adelex
