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

#include "qwire/time_domain.hpp"

#include "qwire/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwire {

namespace {

using State = std::vector<cplx>;

// Right-hand side of the amplitude equations at time t.
class Rhs {
public:
    Rhs(const WireParams& p, double drive_energy)
        : n_(static_cast<std::size_t>(p.n)),
          v_(p.v),
          v_lead_(p.v_lead),
          half_gamma_(p.gamma / 2.0),
          omega_(p.eps0 - drive_energy) {}

    void operator()(double t, const State& u, State& du) const {
        const cplx minus_iv{0.0, -v_};
        for (std::size_t i = 0; i < n_; ++i) {
            cplx neighbours = 0.0;
            if (i > 0) neighbours += u[i - 1];
            if (i + 1 < n_) neighbours += u[i + 1];
            du[i] = minus_iv * neighbours;
        }
        const cplx drive = cplx{0.0, v_lead_} * std::polar(1.0, omega_ * t);
        du[0] -= drive + half_gamma_ * u[0];
        du[n_ - 1] -= half_gamma_ * u[n_ - 1];
    }

private:
    std::size_t n_;
    double v_;
    double v_lead_;
    double half_gamma_;
    double omega_;
};

bool all_finite(const State& u) {
    return std::all_of(u.begin(), u.end(), [](const cplx& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

} // namespace

void IntegratorConfig::validate(const WireParams& p, double drive_energy) const {
    p.validate();
    if (!std::isfinite(drive_energy)) {
        throw ConfigError("drive energy must be finite");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigError("dt must be > 0");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw ConfigError("t_max must be > 0");
    }
    if (!(convergence_window > 0.0) || convergence_window > t_max) {
        throw ConfigError("convergence window must lie in (0, t_max]");
    }
    if (sample_stride == 0) {
        throw ConfigError("sample stride must be >= 1");
    }
    const double rate = std::max({std::fabs(p.eps0 - drive_energy), p.gamma, std::fabs(p.v)});
    if (dt * rate > kResolutionLimit * (1.0 + 1e-12)) {
        throw ConfigError("dt * max(|eps0 - eps_k|, gamma, V) = " + std::to_string(dt * rate)
                          + " exceeds " + std::to_string(kResolutionLimit));
    }
}

EvolutionTrajectory integrate(const WireParams& p, double drive_energy,
                              const IntegratorConfig& cfg) {
    cfg.validate(p, drive_energy);

    const auto n = static_cast<std::size_t>(p.n);
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_max / cfg.dt - 1e-9));
    const double h = cfg.t_max / static_cast<double>(steps);
    const double bound = 2.0 * static_cast<double>(n) * p.v_lead / p.gamma;

    EvolutionTrajectory traj;
    traj.drive_energy = drive_energy;
    traj.dt = h;
    traj.convergence_window = cfg.convergence_window;
    traj.times.reserve(steps / cfg.sample_stride + 2);
    traj.u.reserve(steps / cfg.sample_stride + 2);

    const Rhs rhs(p, drive_energy);
    State u(n, 0.0);
    State k1(n), k2(n), k3(n), k4(n), tmp(n);

    traj.times.push_back(0.0);
    traj.u.push_back(u);

    for (std::size_t step = 1; step <= steps; ++step) {
        const double t = static_cast<double>(step - 1) * h;

        rhs(t, u, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * h * k1[i];
        rhs(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * h * k2[i];
        rhs(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + h * k3[i];
        rhs(t + h, tmp, k4);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }

        if (!all_finite(u)) {
            throw BlowUpError("non-finite amplitude at step " + std::to_string(step));
        }
        for (const cplx& z : u) {
            if (std::abs(z) > bound * (1.0 + 1e-12)) {
                throw BlowUpError("amplitude exceeded the stability bound at step "
                                  + std::to_string(step));
            }
        }

        if (step % cfg.sample_stride == 0 || step == steps) {
            traj.times.push_back(static_cast<double>(step) * h);
            traj.u.push_back(u);
        }
    }
    return traj;
}

std::vector<cplx> steady_state(const WireParams& p, double drive_energy) {
    std::vector<cplx> a = first_inverse_column(p, 2.0 * p.eps0 - drive_energy);
    for (cplx& z : a) {
        z *= p.v_lead;
    }
    return a;
}

SteadyStateReport steady_state_compare(const EvolutionTrajectory& traj, const WireParams& p) {
    p.validate();
    if (traj.samples() < 2 || traj.sites() != static_cast<std::size_t>(p.n)) {
        throw ValidationError("trajectory does not match the wire parameters");
    }
    const double t_end = traj.times.back();
    if (t_end < 10.0 / p.gamma * (1.0 - 1e-12)) {
        throw ValidationError("trajectory must reach t >= 10/gamma for a steady-state comparison");
    }

    const std::vector<cplx> predicted = steady_state(p, traj.drive_energy);
    const std::vector<cplx> literal = first_inverse_column(p, traj.drive_energy);
    const double omega = p.eps0 - traj.drive_energy;
    const auto n = static_cast<std::size_t>(p.n);

    SteadyStateReport report;
    report.window_start = std::max(0.0, t_end - traj.convergence_window);
    auto first = std::lower_bound(traj.times.begin(), traj.times.end(), report.window_start);
    auto begin = static_cast<std::size_t>(first - traj.times.begin());
    if (begin + 1 >= traj.samples()) {
        begin = traj.samples() - 2;
    }

    // Trapezoidal time averages over the window.
    std::vector<double> mod_sum(n, 0.0);
    std::vector<cplx> rot_sum(n, 0.0);
    double span = 0.0;
    for (std::size_t s = begin; s + 1 < traj.samples(); ++s) {
        const double t0 = traj.times[s];
        const double t1 = traj.times[s + 1];
        const double w = 0.5 * (t1 - t0);
        const cplx r0 = std::polar(1.0, -omega * t0);
        const cplx r1 = std::polar(1.0, -omega * t1);
        for (std::size_t i = 0; i < n; ++i) {
            mod_sum[i] += w * (std::abs(traj.u[s][i]) + std::abs(traj.u[s + 1][i]));
            rot_sum[i] += w * (r0 * traj.u[s][i] + r1 * traj.u[s + 1][i]);
        }
        span += t1 - t0;
    }
    report.window_start = traj.times[begin];

    report.sites.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SiteDeviation d{};
        d.predicted = predicted[i];
        d.column_modulus = p.v_lead * std::abs(literal[i]);
        d.mean_modulus = mod_sum[i] / span;
        d.mean_rotated = rot_sum[i] / span;
        d.modulus_deviation = std::fabs(d.mean_modulus - d.column_modulus);
        d.rotated_deviation = std::abs(d.mean_rotated - d.predicted);
        d.phase_deviation =
            d.predicted == 0.0 ? 0.0 : std::fabs(std::arg(d.mean_rotated / d.predicted));
        report.max_deviation =
            std::max({report.max_deviation, d.modulus_deviation, d.rotated_deviation});
        report.max_phase_deviation = std::max(report.max_phase_deviation, d.phase_deviation);
        report.sites.push_back(d);
    }
    return report;
}

double terminal_deviation(const EvolutionTrajectory& traj, const WireParams& p) {
    if (traj.samples() == 0 || traj.sites() != static_cast<std::size_t>(p.n)) {
        throw ValidationError("trajectory does not match the wire parameters");
    }
    const std::vector<cplx> a = steady_state(p, traj.drive_energy);
    const double t_end = traj.times.back();
    const cplx phase = std::polar(1.0, (p.eps0 - traj.drive_energy) * t_end);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(traj.u.back()[i] - a[i] * phase));
    }
    return worst;
}

} // namespace qwire
