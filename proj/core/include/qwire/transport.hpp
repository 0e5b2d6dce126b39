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

/** @file transport.hpp
 *  @brief Transmittance of the wire by two independent routes, spectra,
 *  and the Landauer current.
 *
 *  Green's-function route:
 *      T = Gamma^2 |cof(C_N)_{N,1}|^2 / |det C_N|^2
 *
 *  Evolution-operator route:
 *      T = Gamma^2 / (2 |det C_N|^2) * (cof^2 + C^_{N-1}^2 - C^_{N-2} C^_N)
 *
 *  The two agree only because cof(C^_N)_{N,1}^2 = C^_{N-1}^2 - C^_{N-2} C^_N
 *  for the decoupled chain; equivalence_report() shows both the agreement
 *  and that the bracketed continuant gap is generically non-zero.
 */

#ifndef QWIRE_TRANSPORT_HPP
#define QWIRE_TRANSPORT_HPP

#include "qwire/wire_matrix.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qwire {

enum class Method { gf, eo, both };

Method parse_method(std::string_view text);
std::string_view to_string(Method method);

double transmittance_gf(const WireParams& p, double eps);

/// Averaged evolution-operator quantities at energy eps.
struct EOTerms {
    double term_u1;  ///< <|U_1|^2>
    double term_un;  ///< <|U_N|^2>
    double term_im;  ///< -Im(V_L/D <e^{i(eps-eps0)t} U_1>)
};

EOTerms eo_terms(const WireParams& p, double eps);

/// Gamma/(2D) * (term_un - term_u1) + term_im.
double eo_recombine(const EOTerms& terms, const WireParams& p);

double transmittance_eo(const WireParams& p, double eps);

struct EquivalencePoint {
    double energy;
    double t_gf;
    double t_eo;
    double abs_diff;
    double hat_gap;          ///< C^_{N-1}^2 - C^_{N-2} C^_N
    double bridge_residual;  ///< (V^{2N-2} - hat_gap) / V^{2N-2}
};

struct EquivalenceReport {
    std::vector<EquivalencePoint> points;
    double max_abs_diff = 0.0;
    double max_abs_hat_gap = 0.0;
    double max_abs_bridge_residual = 0.0;
};

/// Throws ValidationError for an empty grid.
EquivalenceReport equivalence_report(const WireParams& p, std::span<const double> grid);

/// points >= 2 energies from e_min to e_max inclusive, evenly spaced.
std::vector<double> uniform_grid(double e_min, double e_max, int points);

struct TransmissionSpectrum {
    WireParams params;
    Method method = Method::both;
    std::vector<double> energies;
    std::vector<double> t_gf;  ///< empty when method == eo
    std::vector<double> t_eo;  ///< empty when method == gf

    bool has_gf() const noexcept { return method != Method::eo; }
    bool has_eo() const noexcept { return method != Method::gf; }
};

/// Evaluates the requested routes on uniform_grid(e_min, e_max, points).
/// threads == 0 picks the hardware concurrency; results are identical for
/// any thread count.
TransmissionSpectrum spectrum(const WireParams& p, double e_min, double e_max, int points,
                              Method method, unsigned threads = 0);

/// Chain eigenvalues eps0 + 2V cos(m pi / (N+1)), m = 1..N, ascending.
std::vector<double> chain_resonances(const WireParams& p);

struct BiasWindow {
    double mu_left = 0.0;
    double mu_right = 0.0;
    double temperature = 0.0;  ///< k_B T in energy units

    void validate() const;
};

/// Fermi-Dirac occupation; a step (1/2 at eps == mu) at zero temperature.
double fermi(double eps, double mu, double temperature);

struct QuadratureConfig {
    double rel_tol = 1e-10;
    std::size_t max_intervals = 2000;  ///< adaptive subdivision limit per panel
    /// Integration reaches this many k_B T beyond the outer chemical
    /// potentials when temperature > 0.
    double tail_kt = 40.0;
};

struct CurrentResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
};

/// Integral of (f_L - f_R) T_GF over energy, in units e = hbar = 1.
CurrentResult landauer_current(const WireParams& p, const BiasWindow& bias,
                               const QuadratureConfig& quad = {});

} // namespace qwire

#endif // QWIRE_TRANSPORT_HPP
