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

/** @file tridiag.hpp
 *  @brief Determinant algebra for real symmetric Toeplitz tridiagonal
 *  matrices.
 *
 *  A matrix with diagonal alpha and off-diagonal beta has leading
 *  principal minors (continuants) obeying
 *
 *      A_0 = 1,  A_1 = alpha,  A_k = alpha * A_{k-1} - beta^2 * A_{k-2}
 *
 *  and its (N,1) cofactor is beta^{N-1}. The two are tied together by
 *
 *      [cof(A_N)_{N,1}]^2 = A_{N-1}^2 - A_{N-2} * A_N,
 *
 *  which identity_residual() measures. Exact routines work on arbitrary
 *  precision integers and require integer-valued entries; floating routines
 *  work in double precision with a shared power-of-two scale.
 */

#ifndef QWIRE_TRIDIAG_HPP
#define QWIRE_TRIDIAG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string_view>
#include <vector>

namespace qwire {

using BigInt = boost::multiprecision::cpp_int;

enum class ArithmeticMode { exact_integer, floating_double };

/// Parses "exact" / "float" (also "exact-integer", "floating-double").
/// Throws ValidationError on anything else.
ArithmeticMode parse_arithmetic_mode(std::string_view text);
std::string_view to_string(ArithmeticMode mode);

/// N x N matrix with alpha on the diagonal and beta on both off-diagonals.
/// n == 0 is the empty matrix (determinant 1).
class SymToeplitzTridiag {
public:
    /// Throws ValidationError for non-finite alpha/beta or negative n.
    SymToeplitzTridiag(double alpha, double beta, int n);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    int n() const noexcept { return n_; }

    /// True when alpha and beta are integers that fit in 64 bits.
    bool has_integer_entries() const noexcept;

    SymToeplitzTridiag with_dimension(int n) const { return {alpha_, beta_, n}; }

private:
    double alpha_;
    double beta_;
    int n_;
};

/// Continuants A_0..A_N in double precision. The true value is
/// scaled[k] * 2^scale_exponent for every k; one exponent covers the whole
/// sequence so that products of neighbouring terms stay at matched scale.
struct DetSequence {
    std::vector<double> scaled;
    int scale_exponent = 0;

    std::size_t size() const noexcept { return scaled.size(); }
    /// Unscaled A_k; overflows to +-inf when not representable.
    double value(std::size_t k) const;
};

/// Rescale once a term exceeds 2^kDefaultRescaleLog2 in magnitude.
inline constexpr int kDefaultRescaleLog2 = 512;

DetSequence det_sequence(const SymToeplitzTridiag& m,
                         int rescale_log2 = kDefaultRescaleLog2);

/// Throws ModeError unless m.has_integer_entries().
std::vector<BigInt> det_sequence_exact(const SymToeplitzTridiag& m);

double det(const SymToeplitzTridiag& m);
BigInt det_exact(const SymToeplitzTridiag& m);

/// beta^N * U_N(alpha / (2 beta)) with U_N the Chebyshev polynomial of the
/// second kind. Throws DomainError when beta == 0.
double det_chebyshev(const SymToeplitzTridiag& m);

/// cof(A_N)_{N,1} = beta^{N-1}. Throws DomainError for N == 0.
double corner_cofactor(const SymToeplitzTridiag& m);
BigInt corner_cofactor_exact(const SymToeplitzTridiag& m);

/// Both sides of the cofactor/continuant identity and their difference.
struct ExactIdentity {
    BigInt cofactor_squared;
    BigInt continuant_gap;  ///< A_{N-1}^2 - A_{N-2} A_N
    BigInt residual;        ///< cofactor_squared - continuant_gap
};

struct FloatIdentity {
    double cofactor_squared;
    double continuant_gap;
    /// (cofactor_squared - continuant_gap) / beta^{2N-2}, evaluated at the
    /// sequence's matched scale. For beta == 0 the gap is reported relative
    /// to A_{N-1}^2 (or absolutely when that vanishes).
    double relative_residual;
};

/// Both throw DomainError for N < 2; the exact form also throws ModeError.
ExactIdentity identity_residual_exact(const SymToeplitzTridiag& m);
FloatIdentity identity_residual(const SymToeplitzTridiag& m);

} // namespace qwire

#endif // QWIRE_TRIDIAG_HPP
