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

#include "qwire/wire_matrix.hpp"

#include "qwire/errors.hpp"
#include "qwire/tridiag.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qwire {

namespace {

bool finite(double x) { return std::isfinite(x); }

} // namespace

WireParams WireParams::from_broadening(int n, double eps0, double v, double gamma,
                                       double bandwidth) {
    WireParams p{n, eps0, v, gamma, bandwidth, 0.0};
    if (gamma > 0.0 && bandwidth > 0.0) {
        p.v_lead = std::sqrt(gamma * bandwidth / (2.0 * std::numbers::pi));
    }
    p.validate();
    return p;
}

WireParams WireParams::from_lead_coupling(int n, double eps0, double v, double v_lead,
                                          double bandwidth) {
    WireParams p{n, eps0, v, 0.0, bandwidth, v_lead};
    if (bandwidth > 0.0) {
        p.gamma = 2.0 * std::numbers::pi * v_lead * v_lead / bandwidth;
    }
    p.validate();
    return p;
}

WireParams WireParams::make(int n, double eps0, double v, std::optional<double> gamma,
                            std::optional<double> v_lead, double bandwidth) {
    if (gamma && v_lead) {
        WireParams p{n, eps0, v, *gamma, bandwidth, *v_lead};
        p.validate();
        return p;
    }
    if (gamma) {
        return from_broadening(n, eps0, v, *gamma, bandwidth);
    }
    if (v_lead) {
        return from_lead_coupling(n, eps0, v, *v_lead, bandwidth);
    }
    throw ValidationError("either gamma or v_lead must be given");
}

void WireParams::validate() const {
    if (n < 1) {
        throw ValidationError("site count must be >= 1, got " + std::to_string(n));
    }
    if (!finite(eps0) || !finite(v) || !finite(gamma) || !finite(bandwidth) || !finite(v_lead)) {
        throw ValidationError("wire parameters must be finite");
    }
    if (!(gamma > 0.0)) {
        throw ValidationError("gamma must be > 0");
    }
    if (!(bandwidth > 0.0)) {
        throw ValidationError("bandwidth must be > 0");
    }
    const double implied = 2.0 * std::numbers::pi * v_lead * v_lead / bandwidth;
    if (std::fabs(implied - gamma) > 1e-9 * gamma) {
        throw ValidationError("gamma and v_lead violate gamma = 2*pi*v_lead^2/bandwidth");
    }
}

WireMatrix::WireMatrix(const WireParams& params, double energy)
    : params_(params), energy_(energy) {
    params_.validate();
    if (!finite(energy)) {
        throw ValidationError("energy must be finite");
    }
}

cplx WireMatrix::diagonal(int i) const {
    const int last = params_.n - 1;
    double broadening = 0.0;
    if (i == 0) {
        broadening += params_.gamma / 2.0;
    }
    if (i == last) {
        broadening += params_.gamma / 2.0;
    }
    return {params_.eps0 - energy_, broadening};
}

cplx WireMatrix::operator()(int i, int j) const {
    if (i == j) {
        return diagonal(i);
    }
    if (i - j == 1 || j - i == 1) {
        return off_diagonal();
    }
    return 0.0;
}

std::vector<cplx> WireMatrix::dense() const {
    const int n = size();
    std::vector<cplx> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out[static_cast<std::size_t>(i) * n + j] = (*this)(i, j);
        }
    }
    return out;
}

HatDets hat_dets(const WireParams& p, double eps) {
    p.validate();
    // Only beta^2 enters the recurrence, so the sign of -V is immaterial.
    const SymToeplitzTridiag hat(p.eps0 - eps, -p.v, p.n);
    const DetSequence seq = det_sequence(hat);
    const auto n = static_cast<std::size_t>(p.n);
    return HatDets{
        seq.value(n),
        seq.value(n - 1),
        n >= 2 ? seq.value(n - 2) : 0.0,
    };
}

cplx det_wire(const WireParams& p, double eps) {
    const HatDets h = hat_dets(p, eps);
    const double g = p.gamma;
    return cplx{h.c_n - g * g / 4.0 * h.c_n2, g * h.c_n1};
}

double corner_cofactor_wire(const WireParams& p) {
    p.validate();
    return std::pow(p.v, p.n - 1);
}

std::vector<cplx> first_inverse_column(const WireParams& p, double eps) {
    const WireMatrix c(p, eps);
    const auto n = static_cast<std::size_t>(p.n);
    std::vector<cplx> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = c.diagonal(static_cast<int>(i));
    }
    const std::vector<cplx> off(n - 1, cplx{c.off_diagonal(), 0.0});
    std::vector<cplx> rhs(n, 0.0);
    rhs[0] = 1.0;
    return solve_tridiagonal(off, diag, off, rhs);
}

std::vector<cplx> solve_tridiagonal(std::span<const cplx> sub, std::span<const cplx> diag,
                                    std::span<const cplx> super, std::span<const cplx> rhs) {
    const std::size_t n = diag.size();
    if (n == 0) {
        throw ValidationError("empty tridiagonal system");
    }
    if (rhs.size() != n || sub.size() != n - 1 || super.size() != n - 1) {
        throw ValidationError("tridiagonal system has inconsistent band sizes");
    }

    std::vector<cplx> dl(sub.begin(), sub.end());
    std::vector<cplx> d(diag.begin(), diag.end());
    std::vector<cplx> du(super.begin(), super.end());
    std::vector<cplx> du2(n >= 2 ? n - 2 : 0, 0.0);  // fill-in from row swaps
    std::vector<cplx> b(rhs.begin(), rhs.end());

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) {
                throw SingularMatrixError("zero pivot in tridiagonal solve");
            }
            const cplx fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
        } else {
            // Swap rows i and i+1.
            const cplx fact = d[i] / dl[i];
            d[i] = dl[i];
            const cplx temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = temp;
            const cplx bi = b[i];
            b[i] = b[i + 1];
            b[i + 1] = bi - fact * b[i + 1];
        }
    }
    if (d[n - 1] == 0.0) {
        throw SingularMatrixError("zero pivot in tridiagonal solve");
    }

    b[n - 1] /= d[n - 1];
    if (n >= 2) {
        b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    }
    for (std::size_t k = n >= 2 ? n - 2 : 0; k-- > 0;) {
        b[k] = (b[k] - du[k] * b[k + 1] - du2[k] * b[k + 2]) / d[k];
    }
    for (const cplx& x : b) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw SingularMatrixError("tridiagonal solve produced non-finite values");
        }
    }
    return b;
}

} // namespace qwire
