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

#include "qwire/tridiag.hpp"

#include "qwire/errors.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace qwire {

namespace {

BigInt to_bigint(double x) {
    return BigInt(static_cast<std::int64_t>(x));
}

bool is_int64_valued(double x) {
    // 2^63 is exactly representable; anything at or above it does not fit.
    constexpr double limit = 9223372036854775808.0;
    return std::isfinite(x) && std::trunc(x) == x && x > -limit && x < limit;
}

void require_integer(const SymToeplitzTridiag& m) {
    if (!m.has_integer_entries()) {
        throw ModeError("exact-integer mode requires integer alpha and beta, got alpha="
                        + std::to_string(m.alpha()) + ", beta=" + std::to_string(m.beta()));
    }
}

// |x|^k as mantissa * 2^exponent, mantissa in [0.5, 1) (or 0).
struct SplitPower {
    double mantissa = 1.0;
    int exponent = 0;
};

SplitPower split_abs_power(double x, int k) {
    SplitPower p;
    const double ax = std::fabs(x);
    for (int i = 0; i < k; ++i) {
        int e = 0;
        p.mantissa = std::frexp(p.mantissa * ax, &e);
        p.exponent += e;
    }
    return p;
}

} // namespace

ArithmeticMode parse_arithmetic_mode(std::string_view text) {
    if (text == "exact" || text == "exact-integer") {
        return ArithmeticMode::exact_integer;
    }
    if (text == "float" || text == "floating" || text == "floating-double") {
        return ArithmeticMode::floating_double;
    }
    throw ValidationError("unknown arithmetic mode '" + std::string(text)
                          + "' (expected exact or float)");
}

std::string_view to_string(ArithmeticMode mode) {
    return mode == ArithmeticMode::exact_integer ? "exact" : "float";
}

SymToeplitzTridiag::SymToeplitzTridiag(double alpha, double beta, int n)
    : alpha_(alpha), beta_(beta), n_(n) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw ValidationError("alpha and beta must be finite");
    }
    if (n < 0) {
        throw ValidationError("dimension must be non-negative, got " + std::to_string(n));
    }
}

bool SymToeplitzTridiag::has_integer_entries() const noexcept {
    return is_int64_valued(alpha_) && is_int64_valued(beta_);
}

double DetSequence::value(std::size_t k) const {
    return std::ldexp(scaled.at(k), scale_exponent);
}

DetSequence det_sequence(const SymToeplitzTridiag& m, int rescale_log2) {
    if (rescale_log2 < 1 || rescale_log2 > 1000) {
        throw ValidationError("rescale threshold exponent must lie in [1, 1000]");
    }
    const double alpha = m.alpha();
    const double beta2 = m.beta() * m.beta();
    const double threshold = std::ldexp(1.0, rescale_log2);

    DetSequence seq;
    seq.scaled.reserve(static_cast<std::size_t>(m.n()) + 1);
    seq.scaled.push_back(1.0);
    if (m.n() >= 1) {
        seq.scaled.push_back(alpha);
    }
    for (int k = 2; k <= m.n(); ++k) {
        const auto& v = seq.scaled;
        double next = alpha * v[k - 1] - beta2 * v[k - 2];
        seq.scaled.push_back(next);
        if (std::fabs(next) > threshold) {
            for (double& x : seq.scaled) {
                x = std::ldexp(x, -rescale_log2);
            }
            seq.scale_exponent += rescale_log2;
        }
    }
    return seq;
}

std::vector<BigInt> det_sequence_exact(const SymToeplitzTridiag& m) {
    require_integer(m);
    const BigInt alpha = to_bigint(m.alpha());
    const BigInt beta = to_bigint(m.beta());
    const BigInt beta2 = beta * beta;

    std::vector<BigInt> seq;
    seq.reserve(static_cast<std::size_t>(m.n()) + 1);
    seq.emplace_back(1);
    if (m.n() >= 1) {
        seq.push_back(alpha);
    }
    for (int k = 2; k <= m.n(); ++k) {
        seq.push_back(alpha * seq[k - 1] - beta2 * seq[k - 2]);
    }
    return seq;
}

double det(const SymToeplitzTridiag& m) {
    const DetSequence seq = det_sequence(m);
    return seq.value(seq.size() - 1);
}

BigInt det_exact(const SymToeplitzTridiag& m) {
    return det_sequence_exact(m).back();
}

double det_chebyshev(const SymToeplitzTridiag& m) {
    if (m.beta() == 0.0) {
        throw DomainError("Chebyshev form needs a non-zero off-diagonal; use det()");
    }
    const double two_x = m.alpha() / m.beta();
    double u_prev = 0.0;  // U_{-1}
    double u = 1.0;       // U_0
    for (int k = 1; k <= m.n(); ++k) {
        const double next = two_x * u - u_prev;
        u_prev = u;
        u = next;
    }
    return std::pow(m.beta(), m.n()) * u;
}

double corner_cofactor(const SymToeplitzTridiag& m) {
    if (m.n() < 1) {
        throw DomainError("corner cofactor needs N >= 1");
    }
    return std::pow(m.beta(), m.n() - 1);
}

BigInt corner_cofactor_exact(const SymToeplitzTridiag& m) {
    if (m.n() < 1) {
        throw DomainError("corner cofactor needs N >= 1");
    }
    require_integer(m);
    return boost::multiprecision::pow(to_bigint(m.beta()), static_cast<unsigned>(m.n() - 1));
}

ExactIdentity identity_residual_exact(const SymToeplitzTridiag& m) {
    if (m.n() < 2) {
        throw DomainError("identity needs N >= 2");
    }
    const auto seq = det_sequence_exact(m);
    const auto n = static_cast<std::size_t>(m.n());

    ExactIdentity out;
    const BigInt cof = corner_cofactor_exact(m);
    out.cofactor_squared = cof * cof;
    out.continuant_gap = seq[n - 1] * seq[n - 1] - seq[n - 2] * seq[n];
    out.residual = out.cofactor_squared - out.continuant_gap;
    return out;
}

FloatIdentity identity_residual(const SymToeplitzTridiag& m) {
    if (m.n() < 2) {
        throw DomainError("identity needs N >= 2");
    }
    const DetSequence seq = det_sequence(m);
    const auto n = static_cast<std::size_t>(m.n());
    const auto& v = seq.scaled;

    // Gap at matched scale: true gap = gap_scaled * 2^(2 * scale_exponent).
    const double gap_scaled = v[n - 1] * v[n - 1] - v[n - 2] * v[n];
    const int gap_exponent = 2 * seq.scale_exponent;

    FloatIdentity out;
    const double cof = corner_cofactor(m);
    out.cofactor_squared = cof * cof;
    out.continuant_gap = std::ldexp(gap_scaled, gap_exponent);

    if (m.beta() != 0.0) {
        const SplitPower b = split_abs_power(m.beta(), 2 * m.n() - 2);
        const double ratio = std::ldexp(gap_scaled / b.mantissa, gap_exponent - b.exponent);
        out.relative_residual = 1.0 - ratio;
    } else {
        const double lead = v[n - 1] * v[n - 1];
        out.relative_residual = lead != 0.0 ? -gap_scaled / lead : -out.continuant_gap;
    }
    return out;
}

} // namespace qwire
