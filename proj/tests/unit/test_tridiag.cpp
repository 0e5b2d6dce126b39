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

#include "qwire/errors.hpp"
#include "qwire/tridiag.hpp"

#include "dense_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace {

using qwire::BigInt;
using qwire::SymToeplitzTridiag;

std::vector<double> unscaled(const qwire::DetSequence& seq) {
    std::vector<double> out;
    for (std::size_t k = 0; k < seq.size(); ++k) out.push_back(seq.value(k));
    return out;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

TEST(SymToeplitzTridiag, RejectsNonFiniteAndNegativeDimension) {
    EXPECT_THROW(SymToeplitzTridiag(std::nan(""), 1.0, 2), qwire::ValidationError);
    EXPECT_THROW(SymToeplitzTridiag(1.0, std::numeric_limits<double>::infinity(), 2),
                 qwire::ValidationError);
    EXPECT_THROW(SymToeplitzTridiag(1.0, 1.0, -1), qwire::ValidationError);
    EXPECT_NO_THROW(SymToeplitzTridiag(1.0, 1.0, 0));
}

TEST(DetSequence, FibonacciExample) {
    const SymToeplitzTridiag m(3.0, 1.0, 4);
    EXPECT_EQ(qwire::det_sequence_exact(m), ints({1, 3, 8, 21, 55}));
    EXPECT_EQ(unscaled(qwire::det_sequence(m)), (std::vector<double>{1, 3, 8, 21, 55}));
    EXPECT_DOUBLE_EQ(oracle::determinant(oracle::toeplitz(3.0, 1.0, 4)), 55.0);
}

TEST(DetSequence, EmptyMatrix) {
    const SymToeplitzTridiag m(-7.25, 3.5, 0);
    EXPECT_EQ(unscaled(qwire::det_sequence(m)), std::vector<double>{1.0});
    EXPECT_DOUBLE_EQ(qwire::det(m), 1.0);
    EXPECT_EQ(qwire::det_exact(SymToeplitzTridiag(4.0, 2.0, 0)), BigInt(1));
}

TEST(DetSequence, LinearGrowthWhenAlphaIsTwiceBeta) {
    const SymToeplitzTridiag m(2.0, 1.0, 3);
    EXPECT_EQ(qwire::det_sequence_exact(m), ints({1, 2, 3, 4}));
    EXPECT_DOUBLE_EQ(oracle::determinant(oracle::toeplitz(2.0, 1.0, 3)), 4.0);
}

TEST(Det, SmallClosedForms) {
    const double a = 1.7;
    const double b = -0.6;
    EXPECT_DOUBLE_EQ(qwire::det(SymToeplitzTridiag(a, b, 2)), a * a - b * b);
    EXPECT_DOUBLE_EQ(qwire::det(SymToeplitzTridiag(a, b, 1)), a);
    EXPECT_EQ(qwire::det_exact(SymToeplitzTridiag(3.0, 1.0, 3)), BigInt(21));
}

TEST(Det, PeriodicContinuant) {
    const SymToeplitzTridiag m(1.0, 1.0, 6);
    EXPECT_EQ(qwire::det_sequence_exact(m), ints({1, 1, 0, -1, -1, 0, 1}));
    EXPECT_DOUBLE_EQ(qwire::det(m), 1.0);
}

TEST(Det, MatchesDenseOracle) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    for (int trial = 0; trial < 400; ++trial) {
        const double a = coef(rng);
        const double b = coef(rng);
        const int n = 1 + trial % 20;
        const double got = qwire::det(SymToeplitzTridiag(a, b, n));
        const double want = oracle::determinant(oracle::toeplitz(a, b, static_cast<std::size_t>(n)));
        // Relative agreement is meaningless when the determinant has
        // cancelled far below its terms; those draws are skipped.
        const double scale = std::pow(std::fabs(a) + 2.0 * std::fabs(b), n);
        if (std::fabs(want) < 1e-6 * scale) continue;
        EXPECT_LE(oracle::rel_diff(got, want), 1e-9) << "a=" << a << " b=" << b << " n=" << n;
    }
}

TEST(DetSequence, ExactRequiresIntegers) {
    EXPECT_THROW(qwire::det_sequence_exact(SymToeplitzTridiag(0.5, 1.0, 3)), qwire::ModeError);
    EXPECT_THROW(qwire::identity_residual_exact(SymToeplitzTridiag(2.0, 1e300, 3)),
                 qwire::ModeError);
}

TEST(DetSequence, PowerOfTwoScalingKeepsLargeSequencesFinite) {
    // A_20 is about 2^800: several rescales at threshold 2^100, none at 2^1000.
    const SymToeplitzTridiag m(std::ldexp(1.0, 40), 1.0, 20);
    const qwire::DetSequence seq = qwire::det_sequence(m, 100);
    EXPECT_GT(seq.scale_exponent, 0);
    EXPECT_EQ(seq.scale_exponent % 100, 0);
    for (double x : seq.scaled) EXPECT_TRUE(std::isfinite(x));
    // Scaling by powers of two is exact: match the unscaled run bit for bit.
    const qwire::DetSequence plain = qwire::det_sequence(m, 1000);
    ASSERT_EQ(plain.scale_exponent, 0);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        EXPECT_EQ(seq.value(k), plain.scaled[k]);
    }
}

TEST(DetSequence, RecurrenceHoldsAtMatchedScale) {
    const SymToeplitzTridiag m(9.5, 3.25, 64);
    const qwire::DetSequence seq = qwire::det_sequence(m);
    const auto& v = seq.scaled;
    for (std::size_t k = 2; k < v.size(); ++k) {
        const double rhs = m.alpha() * v[k - 1] - m.beta() * m.beta() * v[k - 2];
        EXPECT_LE(oracle::rel_diff(v[k], rhs), 1e-12);
    }
}

TEST(DetChebyshev, Examples) {
    EXPECT_DOUBLE_EQ(qwire::det_chebyshev(SymToeplitzTridiag(3.0, 1.0, 4)), 55.0);
    EXPECT_DOUBLE_EQ(qwire::det_chebyshev(SymToeplitzTridiag(0.0, 1.0, 2)), -1.0);
    EXPECT_DOUBLE_EQ(qwire::det_chebyshev(SymToeplitzTridiag(2.0, 1.0, 5)), 6.0);
}

TEST(DetChebyshev, ZeroBetaIsDomainError) {
    EXPECT_THROW(qwire::det_chebyshev(SymToeplitzTridiag(2.0, 0.0, 3)), qwire::DomainError);
}

TEST(DetChebyshev, AgreesWithRecurrence) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = coef(rng);
        const double b = coef(rng);
        const int n = trial % 41;
        const SymToeplitzTridiag m(a, b, n);
        const double d = qwire::det(m);
        const double c = qwire::det_chebyshev(m);
        if (!std::isfinite(d) || !std::isfinite(c) || std::fabs(d) <= 1e-300) continue;
        const double scale = std::pow(std::fabs(a) + 2.0 * std::fabs(b), n);
        if (std::fabs(d) < 1e-6 * scale) continue;  // cancelled, see MatchesDenseOracle
        EXPECT_LE(oracle::rel_diff(c, d), 1e-9) << "a=" << a << " b=" << b << " n=" << n;
    }
}

TEST(CornerCofactor, Examples) {
    const SymToeplitzTridiag m(0.3, 2.0, 4);
    EXPECT_DOUBLE_EQ(qwire::corner_cofactor(m), 8.0);
    EXPECT_DOUBLE_EQ(std::pow(qwire::corner_cofactor(m), 2), std::pow(2.0, 2 * 4 - 2));
    EXPECT_DOUBLE_EQ(qwire::corner_cofactor(SymToeplitzTridiag(5.0, 1.0, 17)), 1.0);
    EXPECT_EQ(qwire::corner_cofactor_exact(SymToeplitzTridiag(1.0, -3.0, 3)), BigInt(9));
}

TEST(CornerCofactor, MatchesDenseCofactor) {
    for (int n = 1; n <= 8; ++n) {
        for (double b : {-3.0, -0.5, 0.0, 1.25, 2.0}) {
            const auto dense = oracle::toeplitz(0.7, b, static_cast<std::size_t>(n));
            // The library returns the corner minor; the signed cofactor adds (-1)^{N+1}.
            const double sign = n % 2 == 1 ? 1.0 : -1.0;
            const double want = sign * oracle::cofactor(dense, static_cast<std::size_t>(n - 1), 0);
            EXPECT_NEAR(qwire::corner_cofactor(SymToeplitzTridiag(0.7, b, n)), want,
                        1e-12 * std::max(1.0, std::fabs(want)));
        }
    }
}

TEST(CornerCofactor, EmptyMatrixIsDomainError) {
    EXPECT_THROW(qwire::corner_cofactor(SymToeplitzTridiag(1.0, 1.0, 0)), qwire::DomainError);
    EXPECT_THROW(qwire::corner_cofactor_exact(SymToeplitzTridiag(1.0, 1.0, 0)),
                 qwire::DomainError);
}

TEST(IdentityResidual, HandExamples) {
    const auto r = qwire::identity_residual_exact(SymToeplitzTridiag(3.0, 1.0, 3));
    EXPECT_EQ(r.cofactor_squared, BigInt(1));
    EXPECT_EQ(r.continuant_gap, BigInt(1));  // 8^2 - 3 * 21
    EXPECT_EQ(r.residual, BigInt(0));

    const auto z = qwire::identity_residual_exact(SymToeplitzTridiag(0.0, 1.0, 2));
    EXPECT_EQ(z.cofactor_squared, BigInt(1));
    EXPECT_EQ(z.continuant_gap, BigInt(1));
    EXPECT_EQ(z.residual, BigInt(0));

    const auto f = qwire::identity_residual(SymToeplitzTridiag(3.0, 1.0, 3));
    EXPECT_EQ(f.relative_residual, 0.0);
}

TEST(IdentityResidual, BelowTwoIsDomainError) {
    EXPECT_THROW(qwire::identity_residual(SymToeplitzTridiag(1.0, 1.0, 1)), qwire::DomainError);
    EXPECT_THROW(qwire::identity_residual_exact(SymToeplitzTridiag(1.0, 1.0, 1)),
                 qwire::DomainError);
}

TEST(IdentityResidual, ExactOverAllSmallIntegers) {
    for (int a = -10; a <= 10; ++a) {
        for (int b = -10; b <= 10; ++b) {
            for (int n : {2, 3, 7, 20, 40}) {
                const auto r = qwire::identity_residual_exact(SymToeplitzTridiag(a, b, n));
                ASSERT_EQ(r.residual, BigInt(0)) << "a=" << a << " b=" << b << " n=" << n;
            }
        }
    }
}

TEST(IdentityResidual, ZeroBetaDegenerateCase) {
    for (int n = 2; n <= 12; ++n) {
        const SymToeplitzTridiag m(3.0, 0.0, n);
        const auto seq = qwire::det_sequence_exact(m);
        EXPECT_EQ(seq.back(), boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n)));
        EXPECT_EQ(qwire::identity_residual_exact(m).cofactor_squared, BigInt(0));
        EXPECT_EQ(qwire::identity_residual_exact(m).residual, BigInt(0));
        EXPECT_LE(std::fabs(qwire::identity_residual(m).relative_residual), 1e-15);
    }
    EXPECT_EQ(qwire::identity_residual(SymToeplitzTridiag(0.0, 0.0, 2)).relative_residual, 0.0);
}

TEST(IdentityResidual, FloatingWellConditionedDraws) {
    // Oscillatory regime |alpha| <= 2|beta|: continuants stay O(N |beta|^N),
    // so double precision resolves the identity.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    std::uniform_real_distribution<double> ratio(-2.0, 2.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const double b = coef(rng);
        if (b == 0.0) continue;
        const double a = ratio(rng) * b;
        const int n = 2 + trial % 39;
        const auto r = qwire::identity_residual(SymToeplitzTridiag(a, b, n));
        EXPECT_LE(std::fabs(r.relative_residual), 1e-9) << "a=" << a << " b=" << b << " n=" << n;
    }
}

TEST(IdentityResidual, TelescopingStep) {
    // A_{N-1}^2 - A_{N-2} A_N = beta^2 (A_{N-2}^2 - A_{N-3} A_{N-1}).
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coef(-10, 10);
    for (int trial = 0; trial < 300; ++trial) {
        const int a = coef(rng);
        const int b = coef(rng);
        const int n = 3 + trial % 38;
        const auto seq = qwire::det_sequence_exact(SymToeplitzTridiag(a, b, n));
        const auto k = static_cast<std::size_t>(n);
        const BigInt lhs = seq[k - 1] * seq[k - 1] - seq[k - 2] * seq[k];
        const BigInt rhs = BigInt(b) * b * (seq[k - 2] * seq[k - 2] - seq[k - 3] * seq[k - 1]);
        ASSERT_EQ(lhs, rhs);
    }
}

TEST(ArithmeticMode, ParsesNames) {
    EXPECT_EQ(qwire::parse_arithmetic_mode("exact"), qwire::ArithmeticMode::exact_integer);
    EXPECT_EQ(qwire::parse_arithmetic_mode("float"), qwire::ArithmeticMode::floating_double);
    EXPECT_THROW(qwire::parse_arithmetic_mode("rational"), qwire::ValidationError);
}

} // namespace
