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

/** @file time_domain.hpp
 *  @brief Evolution-operator amplitudes U_i(t) of a lead state driving the
 *  wire, integrated in time.
 *
 *  With w = eps0 - eps_k the amplitudes obey (zero-based sites, U_{-1} =
 *  U_N = 0)
 *
 *      dU_i/dt = -i V (U_{i+1} + U_{i-1})
 *                - [i == 0]   (i V_L e^{i w t} + Gamma/2 U_0)
 *                - [i == N-1] Gamma/2 U_{N-1}
 *
 *  starting from U(0) = 0. The particular solution is U_i = a_i e^{i w t}
 *  with a = V_L C_N(2 eps0 - eps_k)^{-1} e_1; its moduli equal
 *  V_L |C_N(eps_k)^{-1}_{i,1}| because the wire matrix at mirrored energies
 *  differs only by conjugation and a staggered sign gauge.
 */

#ifndef QWIRE_TIME_DOMAIN_HPP
#define QWIRE_TIME_DOMAIN_HPP

#include "qwire/wire_matrix.hpp"

#include <cstddef>
#include <vector>

namespace qwire {

struct IntegratorConfig {
    double dt = 0.01;
    double t_max = 40.0;
    /// Trailing span averaged by steady_state_compare().
    double convergence_window = 10.0;
    /// Keep every k-th step (the final step is always kept).
    std::size_t sample_stride = 1;

    /// Largest allowed dt * max(|eps0 - eps_k|, Gamma, V).
    static constexpr double kResolutionLimit = 0.1;

    /// Throws ConfigError.
    void validate(const WireParams& p, double drive_energy) const;
};

struct EvolutionTrajectory {
    double drive_energy = 0.0;
    double dt = 0.0;  ///< step actually used (t_max / steps)
    double convergence_window = 0.0;
    std::vector<double> times;
    std::vector<std::vector<cplx>> u;  ///< u[sample][site]

    std::size_t samples() const noexcept { return times.size(); }
    std::size_t sites() const noexcept { return u.empty() ? 0 : u.front().size(); }
};

/// Fixed-step classical Runge-Kutta. Throws ConfigError for a bad config and
/// BlowUpError if the state turns non-finite or any |U_i| exceeds
/// 2 N V_L / Gamma.
EvolutionTrajectory integrate(const WireParams& p, double drive_energy,
                              const IntegratorConfig& cfg);

/// Complex steady amplitudes a_i (see file comment).
std::vector<cplx> steady_state(const WireParams& p, double drive_energy);

struct SiteDeviation {
    cplx predicted;            ///< a_i
    double column_modulus;       ///< V_L |C_N(eps_k)^{-1}_{i,1}|
    double mean_modulus;       ///< window average of |U_i(t)|
    cplx mean_rotated;         ///< window average of e^{-i w t} U_i(t)
    double modulus_deviation;  ///< |mean_modulus - column_modulus|
    double rotated_deviation;  ///< |mean_rotated - a_i|
    double phase_deviation;    ///< |arg(mean_rotated / a_i)|, 0 if a_i == 0
};

struct SteadyStateReport {
    std::vector<SiteDeviation> sites;
    double window_start = 0.0;
    double max_deviation = 0.0;  ///< over both modulus and rotated deviations
    double max_phase_deviation = 0.0;
};

/// Throws ValidationError when the trajectory ends before 10/Gamma or does
/// not belong to p.
SteadyStateReport steady_state_compare(const EvolutionTrajectory& traj, const WireParams& p);

/// max_i |U_i(t_end) - a_i e^{i w t_end}|.
double terminal_deviation(const EvolutionTrajectory& traj, const WireParams& p);

} // namespace qwire

#endif // QWIRE_TIME_DOMAIN_HPP
