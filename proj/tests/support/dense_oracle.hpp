/* Copyright 2026 The qwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Test-only dense linear algebra. Deliberately shares no code with the
// library: matrices are assembled here from raw parameters and reduced by
// plain Gaussian elimination with partial pivoting.

#ifndef QWIRE_TESTS_DENSE_ORACLE_HPP
#define QWIRE_TESTS_DENSE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

template <class T>
struct Dense {
    std::size_t n = 0;
    std::vector<T> a;  // row-major

    explicit Dense(std::size_t size) : n(size), a(size * size, T{}) {}
    T& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Symmetric Toeplitz tridiagonal matrix.
inline Dense<double> toeplitz(double alpha, double beta, std::size_t n) {
    Dense<double> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = alpha;
        if (i + 1 < n) {
            m(i, i + 1) = beta;
            m(i + 1, i) = beta;
        }
    }
    return m;
}

/// Wire matrix: diagonal eps0 - eps, off-diagonal -v, +i gamma/2 added at
/// the first and last diagonal entries (stacking when n == 1).
inline Dense<cplx> wire(std::size_t n, double eps0, double v, double gamma, double eps) {
    Dense<cplx> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = eps0 - eps;
        if (i + 1 < n) {
            m(i, i + 1) = -v;
            m(i + 1, i) = -v;
        }
    }
    m(0, 0) += cplx(0.0, gamma / 2.0);
    m(n - 1, n - 1) += cplx(0.0, gamma / 2.0);
    return m;
}

template <class T>
T determinant(Dense<T> m) {
    using std::abs;
    T det = T(1);
    const std::size_t n = m.n;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (abs(m(r, col)) > abs(m(piv, col))) piv = r;
        }
        if (m(piv, col) == T(0)) return T(0);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const T f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

/// Signed cofactor (-1)^{i+j} M_{ij}, zero-based indices.
template <class T>
T cofactor(const Dense<T>& m, std::size_t row, std::size_t col) {
    if (m.n == 1) return T(1);
    Dense<T> minor(m.n - 1);
    for (std::size_t i = 0, mi = 0; i < m.n; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, mj = 0; j < m.n; ++j) {
            if (j == col) continue;
            minor(mi, mj++) = m(i, j);
        }
        ++mi;
    }
    const T sign = ((row + col) % 2 == 0) ? T(1) : T(-1);
    return sign * determinant(minor);
}

/// Full inverse by Gauss-Jordan with partial pivoting.
template <class T>
Dense<T> inverse(Dense<T> m) {
    using std::abs;
    const std::size_t n = m.n;
    Dense<T> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = T(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (abs(m(r, col)) > abs(m(piv, col))) piv = r;
        }
        if (m(piv, col) == T(0)) throw std::runtime_error("oracle: singular matrix");
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(m(piv, c), m(col, c));
            std::swap(inv(piv, c), inv(col, c));
        }
        const T d = m(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            m(col, c) /= d;
            inv(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const T f = m(r, col);
            if (f == T(0)) continue;
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

/// Transmittance Gamma^2 |(C^{-1})_{1,N}|^2 by full inversion.
inline double transmittance(std::size_t n, double eps0, double v, double gamma, double eps) {
    const Dense<cplx> inv = inverse(wire(n, eps0, v, gamma, eps));
    return gamma * gamma * std::norm(inv(0, n - 1));
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

} // namespace oracle

#endif // QWIRE_TESTS_DENSE_ORACLE_HPP
