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

/** @file wire_matrix.hpp
 *  @brief The wire matrix of an N-site chain coupled to two wide-band leads.
 *
 *  At probe energy eps the matrix is symmetric tridiagonal with diagonal
 *  eps0 - eps, off-diagonal -V, and +i*Gamma/2 added at (1,1) and (N,N).
 *  For N = 1 both corner terms land on the same entry (eps0 - eps + i*Gamma).
 *
 *  Indices in this API are zero-based.
 */

#ifndef QWIRE_WIRE_MATRIX_HPP
#define QWIRE_WIRE_MATRIX_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace qwire {

using cplx = std::complex<double>;

/// Uniform chain plus symmetric wide-band leads.
/// Wide-band relation: gamma = 2*pi*v_lead^2 / bandwidth.
struct WireParams {
    int n = 1;
    double eps0 = 0.0;
    double v = 1.0;          ///< inter-site hopping V_N
    double gamma = 1.0;      ///< lead broadening, same for both leads
    double bandwidth = 1.0;  ///< effective lead band width D
    double v_lead = 0.0;     ///< lead coupling V_L

    /// Derives v_lead from gamma and bandwidth.
    static WireParams from_broadening(int n, double eps0, double v, double gamma,
                                      double bandwidth = 1.0);
    /// Derives gamma from v_lead and bandwidth.
    static WireParams from_lead_coupling(int n, double eps0, double v, double v_lead,
                                         double bandwidth = 1.0);
    /// Uses whichever of gamma / v_lead is given; when both are, they must
    /// satisfy the wide-band relation to 1e-9 relative.
    static WireParams make(int n, double eps0, double v, std::optional<double> gamma,
                           std::optional<double> v_lead, double bandwidth = 1.0);

    /// Throws ValidationError if any invariant is broken.
    void validate() const;
};

/// Determinants of the decoupled (Gamma = 0) chain at dimensions N, N-1,
/// N-2, with the conventions C^_0 = 1 and C^_{-1} = 0.
struct HatDets {
    double c_n;
    double c_n1;
    double c_n2;
};

/// Lazy view of the wire matrix at a fixed energy.
class WireMatrix {
public:
    WireMatrix(const WireParams& params, double energy);

    const WireParams& params() const noexcept { return params_; }
    double energy() const noexcept { return energy_; }
    int size() const noexcept { return params_.n; }

    cplx diagonal(int i) const;
    double off_diagonal() const noexcept { return -params_.v; }
    cplx operator()(int i, int j) const;

    /// Row-major dense copy; intended for small N.
    std::vector<cplx> dense() const;

private:
    WireParams params_;
    double energy_;
};

HatDets hat_dets(const WireParams& p, double eps);

/// det C_N via the corner expansion
///     C^_N + i*Gamma*C^_{N-1} - (Gamma^2/4)*C^_{N-2}.
cplx det_wire(const WireParams& p, double eps);

/// cof(C_N)_{N,1} = V^{N-1}; 1 for N = 1. Independent of eps and Gamma.
double corner_cofactor_wire(const WireParams& p);

/// Column u with C_N u = e_1, i.e. the first column of C_N^{-1}.
/// Throws SingularMatrixError when no unique solution exists.
std::vector<cplx> first_inverse_column(const WireParams& p, double eps);

/// Solves a general complex tridiagonal system by Gaussian elimination with
/// partial (row) pivoting. sub and super have size n-1, diag and rhs size n.
/// Throws SingularMatrixError on a zero pivot, ValidationError on size
/// mismatch.
std::vector<cplx> solve_tridiagonal(std::span<const cplx> sub, std::span<const cplx> diag,
                                    std::span<const cplx> super, std::span<const cplx> rhs);

} // namespace qwire

#endif // QWIRE_WIRE_MATRIX_HPP
