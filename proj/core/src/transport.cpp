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

#include "qwire/transport.hpp"

#include "qwire/errors.hpp"
#include "qwire/tridiag.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace qwire {

Method parse_method(std::string_view text) {
    if (text == "gf") return Method::gf;
    if (text == "eo") return Method::eo;
    if (text == "both") return Method::both;
    throw ValidationError("unknown method '" + std::string(text) + "' (expected gf, eo or both)");
}

std::string_view to_string(Method method) {
    switch (method) {
    case Method::gf: return "gf";
    case Method::eo: return "eo";
    case Method::both: return "both";
    }
    return "both";
}

double transmittance_gf(const WireParams& p, double eps) {
    const cplx det = det_wire(p, eps);
    const double cof = corner_cofactor_wire(p);
    // G^r_{1N} = cof / det
    return p.gamma * p.gamma * cof * cof / std::norm(det);
}

EOTerms eo_terms(const WireParams& p, double eps) {
    const HatDets h = hat_dets(p, eps);
    const double det2 = std::norm(det_wire(p, eps));
    const double cof = corner_cofactor_wire(p);
    const double g = p.gamma;
    const double weight = 2.0 * std::numbers::pi * p.v_lead * p.v_lead;

    EOTerms t;
    t.term_u1 = weight * std::norm(cplx{h.c_n1, g / 2.0 * h.c_n2}) / det2;
    t.term_un = weight * cof * cof / det2;
    t.term_im = g * g / (2.0 * det2)
                * (2.0 * h.c_n1 * h.c_n1 - h.c_n2 * h.c_n + g * g / 4.0 * h.c_n2 * h.c_n2);
    return t;
}

double eo_recombine(const EOTerms& terms, const WireParams& p) {
    return p.gamma / (2.0 * p.bandwidth) * (terms.term_un - terms.term_u1) + terms.term_im;
}

double transmittance_eo(const WireParams& p, double eps) {
    const HatDets h = hat_dets(p, eps);
    const double det2 = std::norm(det_wire(p, eps));
    const double cof = corner_cofactor_wire(p);
    const double t = p.gamma * p.gamma / (2.0 * det2)
                     * (cof * cof + h.c_n1 * h.c_n1 - h.c_n2 * h.c_n);
#ifndef NDEBUG
    {
        const EOTerms terms = eo_terms(p, eps);
        const double scale = p.gamma / (2.0 * p.bandwidth) * (terms.term_un + terms.term_u1)
                             + std::fabs(terms.term_im);
        assert(std::fabs(eo_recombine(terms, p) - t) <= 1e-9 * scale + 1e-300);
    }
#endif
    return t;
}

EquivalenceReport equivalence_report(const WireParams& p, std::span<const double> grid) {
    if (grid.empty()) {
        throw ValidationError("equivalence report needs a non-empty grid");
    }
    p.validate();
    EquivalenceReport report;
    report.points.reserve(grid.size());
    for (const double eps : grid) {
        EquivalencePoint pt{};
        pt.energy = eps;
        pt.t_gf = transmittance_gf(p, eps);
        pt.t_eo = transmittance_eo(p, eps);
        pt.abs_diff = std::fabs(pt.t_gf - pt.t_eo);

        const HatDets h = hat_dets(p, eps);
        pt.hat_gap = h.c_n1 * h.c_n1 - h.c_n2 * h.c_n;
        if (p.n >= 2) {
            const SymToeplitzTridiag hat(p.eps0 - eps, -p.v, p.n);
            pt.bridge_residual = identity_residual(hat).relative_residual;
        } else {
            pt.bridge_residual = 1.0 - pt.hat_gap;  // cof^2 = 1 at N = 1
        }

        report.max_abs_diff = std::max(report.max_abs_diff, pt.abs_diff);
        report.max_abs_hat_gap = std::max(report.max_abs_hat_gap, std::fabs(pt.hat_gap));
        report.max_abs_bridge_residual =
            std::max(report.max_abs_bridge_residual, std::fabs(pt.bridge_residual));
        report.points.push_back(pt);
    }
    return report;
}

std::vector<double> uniform_grid(double e_min, double e_max, int points) {
    if (!std::isfinite(e_min) || !std::isfinite(e_max) || !(e_min < e_max)) {
        throw ValidationError("grid needs finite e_min < e_max");
    }
    if (points < 2) {
        throw ValidationError("grid needs at least 2 points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double step = (e_max - e_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = e_min + step * i;
    }
    grid.back() = e_max;
    return grid;
}

TransmissionSpectrum spectrum(const WireParams& p, double e_min, double e_max, int points,
                              Method method, unsigned threads) {
    p.validate();
    TransmissionSpectrum out;
    out.params = p;
    out.method = method;
    out.energies = uniform_grid(e_min, e_max, points);
    const std::size_t count = out.energies.size();
    if (out.has_gf()) out.t_gf.resize(count);
    if (out.has_eo()) out.t_eo.resize(count);

    auto worker = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < count; i += stride) {
            const double eps = out.energies[i];
            if (out.has_gf()) out.t_gf[i] = transmittance_gf(p, eps);
            if (out.has_eo()) out.t_eo[i] = transmittance_eo(p, eps);
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker, t, threads);
        }
    }
    return out;
}

std::vector<double> chain_resonances(const WireParams& p) {
    p.validate();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(p.n));
    for (int m = 1; m <= p.n; ++m) {
        out.push_back(p.eps0 + 2.0 * p.v * std::cos(m * std::numbers::pi / (p.n + 1)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void BiasWindow::validate() const {
    if (!std::isfinite(mu_left) || !std::isfinite(mu_right)) {
        throw ValidationError("chemical potentials must be finite");
    }
    if (!std::isfinite(temperature) || temperature < 0.0) {
        throw ValidationError("temperature must be finite and >= 0");
    }
}

double fermi(double eps, double mu, double temperature) {
    if (temperature == 0.0) {
        if (eps < mu) return 1.0;
        if (eps > mu) return 0.0;
        return 0.5;
    }
    const double x = (eps - mu) / temperature;
    // 1/(1+e^x) without overflow for large positive x.
    return x > 0.0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
}

CurrentResult landauer_current(const WireParams& p, const BiasWindow& bias,
                               const QuadratureConfig& quad) {
    p.validate();
    bias.validate();

    CurrentResult out;
    const double lo_mu = std::min(bias.mu_left, bias.mu_right);
    const double hi_mu = std::max(bias.mu_left, bias.mu_right);
    const double tail = bias.temperature > 0.0 ? quad.tail_kt * bias.temperature : 0.0;
    out.window_lo = lo_mu - tail;
    out.window_hi = hi_mu + tail;
    if (bias.mu_left == bias.mu_right) {
        return out;
    }

    auto integrand = [&](double eps) {
        double occupation;
        if (bias.temperature == 0.0) {
            occupation = bias.mu_left > bias.mu_right ? 1.0 : -1.0;
        } else {
            occupation = fermi(eps, bias.mu_left, bias.temperature)
                         - fermi(eps, bias.mu_right, bias.temperature);
        }
        return occupation * transmittance_gf(p, eps);
    };

    // Split at resonances and chemical potentials so no panel straddles a
    // narrow peak or a Fermi edge.
    std::vector<double> breaks{out.window_lo, out.window_hi};
    std::vector<double> interior = chain_resonances(p);
    if (bias.temperature > 0.0) {
        interior.push_back(lo_mu);
        interior.push_back(hi_mu);
    }
    for (const double r : interior) {
        if (r > out.window_lo && r < out.window_hi) {
            breaks.push_back(r);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    struct Workspace {
        gsl_integration_workspace* ws;
        explicit Workspace(std::size_t n) : ws(gsl_integration_workspace_alloc(n)) {}
        ~Workspace() { gsl_integration_workspace_free(ws); }
        Workspace(const Workspace&) = delete;
        Workspace& operator=(const Workspace&) = delete;
    };
    const std::size_t limit = std::max<std::size_t>(quad.max_intervals, 1);
    Workspace work(limit);

    using Integrand = decltype(integrand);
    gsl_function fn;
    fn.function = [](double x, void* ctx) { return (*static_cast<Integrand*>(ctx))(x); };
    fn.params = &integrand;

    // Failures come back as status codes instead of gsl's default abort.
    struct HandlerGuard {
        gsl_error_handler_t* previous = gsl_set_error_handler_off();
        ~HandlerGuard() { gsl_set_error_handler(previous); }
    } guard;
    const std::size_t panels = breaks.size() - 1;
    auto integrate_panel = [&](std::size_t i, double epsabs, double epsrel, double& value,
                               double& err) {
        return gsl_integration_qag(&fn, breaks[i], breaks[i + 1], epsabs, epsrel, limit,
                                   GSL_INTEG_GAUSS21, work.ws, &value, &err);
    };

    // A coarse pass fixes the magnitude of the integral. Tail panels where the
    // occupation difference is ~e^{-tail_kt} then stop at an absolute
    // tolerance instead of chasing a relative one below roundoff.
    double scale = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        double value = 0.0;
        double err = 0.0;
        integrate_panel(i, 0.0, 1e-6, value, err);
        if (!std::isfinite(value)) {
            throw std::runtime_error("current quadrature produced a non-finite value");
        }
        scale += std::fabs(value);
    }
    const double epsabs = quad.rel_tol * scale / static_cast<double>(panels);

    for (std::size_t i = 0; i < panels; ++i) {
        double value = 0.0;
        double err = 0.0;
        const int status = integrate_panel(i, epsabs, quad.rel_tol, value, err);
        if (status != GSL_SUCCESS && status != GSL_EROUND) {
            throw std::runtime_error(std::string("current quadrature failed: ")
                                     + gsl_strerror(status));
        }
        out.value += value;
        out.error_estimate += err;
    }
    return out;
}

} // namespace qwire
