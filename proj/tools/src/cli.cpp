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

#include "qwire_cli/cli.hpp"

#include "qwire/qwire.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qwire::cli {

std::string format_double(double x) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, result.ptr);
}

double parse_double(std::string_view text) {
    double x = 0.0;
    const char* end = text.data() + text.size();
    const auto result = std::from_chars(text.data(), end, x);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return x;
}

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

enum class Format { csv, json };

struct CommonOptions {
    std::string format;
    std::string output;
    std::string config;
};

Format resolve_format(const CommonOptions& common, Format fallback) {
    if (common.format.empty()) return fallback;
    if (common.format == "csv") return Format::csv;
    if (common.format == "json") return Format::json;
    throw ValidationError("unknown format '" + common.format + "' (expected csv or json)");
}

void add_common_options(CLI::App* sub, CommonOptions& common) {
    sub->add_option("--format", common.format, "output format: csv or json");
    sub->add_option("-o,--output", common.output,
                    std::string("output file; relative paths resolve against $") + kOutputDirEnv);
    sub->add_option("--config", common.config, "key=value file; flags override its values");
}

struct WireOptions {
    int n = 1;
    double eps0 = 0.0;
    double v = 1.0;
    double gamma = 0.0;
    double v_lead = 0.0;
    double bandwidth = 1.0;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* v_lead_opt = nullptr;

    WireParams build() const {
        const std::optional<double> g = gamma_opt->count() > 0 ? std::optional(gamma) : std::nullopt;
        const std::optional<double> vl =
            v_lead_opt->count() > 0 ? std::optional(v_lead) : std::nullopt;
        return WireParams::make(n, eps0, v, g, vl, bandwidth);
    }
};

void add_wire_options(CLI::App* sub, WireOptions& w) {
    sub->add_option("-N,--n", w.n, "number of wire sites")->required();
    sub->add_option("--eps0", w.eps0, "on-site energy");
    sub->add_option("--v", w.v, "inter-site hopping");
    w.gamma_opt = sub->add_option("--gamma", w.gamma, "lead broadening");
    w.v_lead_opt = sub->add_option("--v-lead", w.v_lead, "lead coupling");
    sub->add_option("--bandwidth", w.bandwidth, "effective lead band width");
}

Json wire_json(const WireParams& p) {
    Json j;
    j["n"] = p.n;
    j["eps0"] = p.eps0;
    j["v"] = p.v;
    j["gamma"] = p.gamma;
    j["v_lead"] = p.v_lead;
    j["bandwidth"] = p.bandwidth;
    return j;
}

std::string scalar_text(const Json& value) {
    if (value.is_number_float()) return format_double(value.get<double>());
    if (value.is_number_unsigned()) return std::to_string(value.get<unsigned long long>());
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

/// Accumulates one CSV document: `#` metadata, a header row, data rows.
class Csv {
public:
    Csv(std::string_view command, const Json& parameters) {
        text_ << "# qwire " << command << '\n';
        text_ << "# schema_version=" << kSchemaVersion << '\n';
        for (const auto& [key, value] : parameters.items()) {
            text_ << "# " << key << '=' << scalar_text(value) << '\n';
        }
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) text_ << ',';
            text_ << cells[i];
        }
        text_ << '\n';
    }

    void comment(const Json& fields, std::string_view label) {
        text_ << "# " << label;
        for (const auto& [key, value] : fields.items()) {
            text_ << ' ' << key << '=' << scalar_text(value);
        }
        text_ << '\n';
    }

    std::string str() const { return text_.str(); }

private:
    std::ostringstream text_;
};

Json json_document(std::string_view command, const Json& parameters) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["parameters"] = parameters;
    return doc;
}

std::string json_text(const Json& doc) { return doc.dump(2) + '\n'; }

void emit(const CommonOptions& common, const std::string& text, std::ostream& out) {
    if (common.output.empty()) {
        out << text;
        return;
    }
    namespace fs = std::filesystem;
    fs::path path(common.output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            path = fs::path(dir) / path;
        }
    }
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + path.string());
    file << text;
    if (!file) throw std::runtime_error("failed writing output file " + path.string());
}

// ---------------------------------------------------------------- identity

struct IdentityOptions {
    CommonOptions common;
    double alpha = 0.0;
    double beta = 0.0;
    int n_max = 2;
    std::string mode = "float";
};

std::string run_identity(const IdentityOptions& o) {
    const ArithmeticMode mode = parse_arithmetic_mode(o.mode);
    if (o.n_max < 2) {
        throw ValidationError("n-max must be >= 2, got " + std::to_string(o.n_max));
    }
    const SymToeplitzTridiag base(o.alpha, o.beta, o.n_max);
    const Format format = resolve_format(o.common, Format::csv);

    Json params;
    params["alpha"] = o.alpha;
    params["beta"] = o.beta;
    params["n_max"] = o.n_max;
    params["mode"] = std::string(to_string(mode));

    const std::vector<std::string> header{"n", "cofactor_squared", "continuant_gap", "residual"};
    std::vector<std::vector<std::string>> text_rows;
    Json json_rows = Json::array();
    for (int n = 2; n <= o.n_max; ++n) {
        const SymToeplitzTridiag m = base.with_dimension(n);
        Json row;
        row["n"] = n;
        if (mode == ArithmeticMode::exact_integer) {
            const ExactIdentity id = identity_residual_exact(m);
            text_rows.push_back({std::to_string(n), id.cofactor_squared.str(),
                                 id.continuant_gap.str(), id.residual.str()});
            // Exact integers may exceed 64 bits, so JSON carries them as strings.
            row["cofactor_squared"] = id.cofactor_squared.str();
            row["continuant_gap"] = id.continuant_gap.str();
            row["residual"] = id.residual.str();
        } else {
            const FloatIdentity id = identity_residual(m);
            text_rows.push_back({std::to_string(n), format_double(id.cofactor_squared),
                                 format_double(id.continuant_gap),
                                 format_double(id.relative_residual)});
            row["cofactor_squared"] = id.cofactor_squared;
            row["continuant_gap"] = id.continuant_gap;
            row["residual"] = id.relative_residual;
        }
        json_rows.push_back(std::move(row));
    }

    if (format == Format::json) {
        Json doc = json_document("identity", params);
        doc["rows"] = std::move(json_rows);
        return json_text(doc);
    }
    Csv csv("identity", params);
    csv.row(header);
    for (const auto& r : text_rows) csv.row(r);
    return csv.str();
}

// ---------------------------------------------------------------- spectrum

struct GridOptions {
    double from = 0.0;
    double to = 0.0;
    int points = 0;
};

void add_grid_options(CLI::App* sub, GridOptions& g) {
    sub->add_option("--from", g.from, "lowest energy")->required();
    sub->add_option("--to", g.to, "highest energy")->required();
    sub->add_option("--points", g.points, "grid points, endpoints included")->required();
}

struct SpectrumOptions {
    CommonOptions common;
    WireOptions wire;
    GridOptions grid;
    std::string method = "both";
    unsigned threads = 0;
};

std::string run_spectrum(const SpectrumOptions& o) {
    const WireParams p = o.wire.build();
    const Method method = parse_method(o.method);
    const Format format = resolve_format(o.common, Format::csv);
    const TransmissionSpectrum s =
        spectrum(p, o.grid.from, o.grid.to, o.grid.points, method, o.threads);

    Json params = wire_json(p);
    params["from"] = o.grid.from;
    params["to"] = o.grid.to;
    params["points"] = o.grid.points;
    params["method"] = std::string(to_string(method));

    const bool both = s.has_gf() && s.has_eo();
    if (format == Format::json) {
        Json doc = json_document("spectrum", params);
        doc["energy"] = s.energies;
        if (s.has_gf()) doc["t_gf"] = s.t_gf;
        if (s.has_eo()) doc["t_eo"] = s.t_eo;
        if (both) {
            std::vector<double> diff(s.energies.size());
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = std::fabs(s.t_gf[i] - s.t_eo[i]);
            doc["abs_diff"] = diff;
        }
        return json_text(doc);
    }
    Csv csv("spectrum", params);
    std::vector<std::string> header{"energy"};
    if (s.has_gf()) header.emplace_back("t_gf");
    if (s.has_eo()) header.emplace_back("t_eo");
    if (both) header.emplace_back("abs_diff");
    csv.row(header);
    for (std::size_t i = 0; i < s.energies.size(); ++i) {
        std::vector<std::string> cells{format_double(s.energies[i])};
        if (s.has_gf()) cells.push_back(format_double(s.t_gf[i]));
        if (s.has_eo()) cells.push_back(format_double(s.t_eo[i]));
        if (both) cells.push_back(format_double(std::fabs(s.t_gf[i] - s.t_eo[i])));
        csv.row(cells);
    }
    return csv.str();
}

// ---------------------------------------------------------------- current

struct CurrentOptions {
    CommonOptions common;
    WireOptions wire;
    BiasWindow bias;
    QuadratureConfig quad;
};

std::string run_current(const CurrentOptions& o) {
    const WireParams p = o.wire.build();
    const Format format = resolve_format(o.common, Format::json);
    const CurrentResult r = landauer_current(p, o.bias, o.quad);

    Json params = wire_json(p);
    params["mu_l"] = o.bias.mu_left;
    params["mu_r"] = o.bias.mu_right;
    params["temperature"] = o.bias.temperature;
    params["rel_tol"] = o.quad.rel_tol;

    if (format == Format::json) {
        Json doc = json_document("current", params);
        doc["value"] = r.value;
        doc["error_estimate"] = r.error_estimate;
        doc["window"] = {r.window_lo, r.window_hi};
        return json_text(doc);
    }
    Csv csv("current", params);
    csv.row({"value", "error_estimate", "window_lo", "window_hi"});
    csv.row({format_double(r.value), format_double(r.error_estimate), format_double(r.window_lo),
             format_double(r.window_hi)});
    return csv.str();
}

// ---------------------------------------------------------------- evolve

struct EvolveOptions {
    CommonOptions common;
    WireOptions wire;
    double drive = 0.0;
    double dt = IntegratorConfig{}.dt;
    double t_max = 0.0;
    double window = 0.0;
    std::size_t stride = 1;
    CLI::Option* drive_opt = nullptr;
    CLI::Option* t_max_opt = nullptr;
    CLI::Option* window_opt = nullptr;
};

std::string run_evolve(const EvolveOptions& o) {
    const WireParams p = o.wire.build();
    const Format format = resolve_format(o.common, Format::csv);
    const double drive = o.drive_opt->count() > 0 ? o.drive : p.eps0;

    IntegratorConfig cfg;
    cfg.dt = o.dt;
    cfg.t_max = o.t_max_opt->count() > 0 ? o.t_max : 40.0 / p.gamma;
    cfg.convergence_window = o.window_opt->count() > 0 ? o.window : 10.0 / p.gamma;
    cfg.sample_stride = o.stride;
    const EvolutionTrajectory traj = integrate(p, drive, cfg);

    Json summary;
    try {
        const SteadyStateReport r = steady_state_compare(traj, p);
        summary["max_deviation"] = r.max_deviation;
        summary["max_phase_deviation"] = r.max_phase_deviation;
        summary["window_start"] = r.window_start;
        summary["terminal_deviation"] = terminal_deviation(traj, p);
    } catch (const ValidationError& e) {
        summary["unavailable"] = std::string(e.what());
    }

    Json params = wire_json(p);
    params["drive"] = drive;
    params["dt"] = traj.dt;
    params["t_max"] = cfg.t_max;
    params["window"] = cfg.convergence_window;
    params["stride"] = cfg.sample_stride;

    const std::size_t sites = traj.sites();
    if (format == Format::json) {
        Json doc = json_document("evolve", params);
        doc["t"] = traj.times;
        Json site_list = Json::array();
        for (std::size_t i = 0; i < sites; ++i) {
            std::vector<double> re, im, mod;
            for (const auto& row : traj.u) {
                re.push_back(row[i].real());
                im.push_back(row[i].imag());
                mod.push_back(std::abs(row[i]));
            }
            Json site;
            site["site"] = i + 1;
            site["re"] = re;
            site["im"] = im;
            site["abs"] = mod;
            site_list.push_back(std::move(site));
        }
        doc["sites"] = std::move(site_list);
        doc["summary"] = summary;
        return json_text(doc);
    }
    Csv csv("evolve", params);
    std::vector<std::string> header{"t"};
    for (std::size_t i = 1; i <= sites; ++i) {
        const std::string k = std::to_string(i);
        header.push_back("re_u" + k);
        header.push_back("im_u" + k);
        header.push_back("abs_u" + k);
    }
    csv.row(header);
    for (std::size_t s = 0; s < traj.samples(); ++s) {
        std::vector<std::string> cells{format_double(traj.times[s])};
        for (const cplx& z : traj.u[s]) {
            cells.push_back(format_double(z.real()));
            cells.push_back(format_double(z.imag()));
            cells.push_back(format_double(std::abs(z)));
        }
        csv.row(cells);
    }
    csv.comment(summary, "summary");
    return csv.str();
}

// ---------------------------------------------------------------- equivalence

struct EquivalenceOptions {
    CommonOptions common;
    WireOptions wire;
    GridOptions grid;
};

std::string run_equivalence(const EquivalenceOptions& o) {
    const WireParams p = o.wire.build();
    const Format format = resolve_format(o.common, Format::csv);
    const std::vector<double> grid = uniform_grid(o.grid.from, o.grid.to, o.grid.points);
    const EquivalenceReport r = equivalence_report(p, grid);

    Json params = wire_json(p);
    params["from"] = o.grid.from;
    params["to"] = o.grid.to;
    params["points"] = o.grid.points;

    Json summary;
    summary["max_abs_diff"] = r.max_abs_diff;
    summary["max_abs_hat_gap"] = r.max_abs_hat_gap;
    summary["max_abs_bridge_residual"] = r.max_abs_bridge_residual;

    if (format == Format::json) {
        Json doc = json_document("equivalence", params);
        Json points = Json::array();
        for (const EquivalencePoint& pt : r.points) {
            Json j;
            j["energy"] = pt.energy;
            j["t_gf"] = pt.t_gf;
            j["t_eo"] = pt.t_eo;
            j["abs_diff"] = pt.abs_diff;
            j["hat_gap"] = pt.hat_gap;
            j["bridge_residual"] = pt.bridge_residual;
            points.push_back(std::move(j));
        }
        doc["points"] = std::move(points);
        doc["summary"] = summary;
        return json_text(doc);
    }
    Csv csv("equivalence", params);
    csv.row({"energy", "t_gf", "t_eo", "abs_diff", "hat_gap", "bridge_residual"});
    for (const EquivalencePoint& pt : r.points) {
        csv.row({format_double(pt.energy), format_double(pt.t_gf), format_double(pt.t_eo),
                 format_double(pt.abs_diff), format_double(pt.hat_gap),
                 format_double(pt.bridge_residual)});
    }
    csv.comment(summary, "summary");
    return csv.str();
}

// ---------------------------------------------------------------- config files

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot read config file " + path);
    std::map<std::string, std::string> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ValidationError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = trim(std::string_view(t).substr(0, eq));
        std::string value = trim(std::string_view(t).substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        std::replace(key.begin(), key.end(), '_', '-');
        entries[key] = value;
    }
    return entries;
}

bool given_on_command_line(const CLI::Option* opt, const std::vector<std::string>& args) {
    for (const std::string& token : args) {
        for (const std::string& name : opt->get_lnames()) {
            const std::string flag = "--" + name;
            if (token == flag || token.rfind(flag + "=", 0) == 0) return true;
        }
        for (const std::string& name : opt->get_snames()) {
            if (token.rfind("-" + name, 0) == 0 && token.rfind("--", 0) != 0) return true;
        }
    }
    return false;
}

/// Appends `--key value` for every config entry not already given as a flag.
void inject_config(CLI::App& app, std::vector<std::string>& args) {
    if (args.empty()) return;
    CLI::App* sub = app.get_subcommand_no_throw(args.front());
    if (sub == nullptr) return;
    std::optional<std::string> path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (!path) return;
    for (const auto& [key, value] : read_config(*path)) {
        CLI::Option* opt = key == "config" ? nullptr : sub->get_option_no_throw("--" + key);
        if (opt == nullptr && key.size() == 1) opt = sub->get_option_no_throw("-" + key);
        if (opt == nullptr) {
            throw ValidationError("unknown key '" + key + "' in config file " + *path);
        }
        if (given_on_command_line(opt, args)) continue;
        args.push_back("--" + opt->get_lnames().front());
        args.push_back(value);
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transmittance of an N-site tight-binding wire between wide-band leads", "qwire"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qwire 0.1.0");

    IdentityOptions identity;
    CLI::App* identity_cmd =
        app.add_subcommand("identity", "check the corner-cofactor continuant identity");
    identity_cmd->add_option("--alpha", identity.alpha, "diagonal entry")->required();
    identity_cmd->add_option("--beta", identity.beta, "off-diagonal entry")->required();
    identity_cmd->add_option("--n-max", identity.n_max, "largest dimension, >= 2")->required();
    identity_cmd->add_option("--mode", identity.mode, "exact or float");
    add_common_options(identity_cmd, identity.common);

    SpectrumOptions spectrum_opts;
    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "transmittance on an energy grid");
    add_wire_options(spectrum_cmd, spectrum_opts.wire);
    add_grid_options(spectrum_cmd, spectrum_opts.grid);
    spectrum_cmd->add_option("--method", spectrum_opts.method, "gf, eo or both");
    spectrum_cmd->add_option("--threads", spectrum_opts.threads, "worker threads, 0 for all cores");
    add_common_options(spectrum_cmd, spectrum_opts.common);

    CurrentOptions current;
    CLI::App* current_cmd = app.add_subcommand("current", "Landauer current through the wire");
    add_wire_options(current_cmd, current.wire);
    current_cmd->add_option("--mu-l", current.bias.mu_left, "left chemical potential")
        ->required();
    current_cmd->add_option("--mu-r", current.bias.mu_right, "right chemical potential")
        ->required();
    current_cmd->add_option("--temperature", current.bias.temperature, "k_B T, 0 for a step");
    current_cmd->add_option("--rel-tol", current.quad.rel_tol, "quadrature relative tolerance");
    add_common_options(current_cmd, current.common);

    EvolveOptions evolve;
    CLI::App* evolve_cmd = app.add_subcommand("evolve", "time-domain amplitudes from rest");
    add_wire_options(evolve_cmd, evolve.wire);
    evolve.drive_opt =
        evolve_cmd->add_option("--drive", evolve.drive, "lead-state energy, default eps0");
    evolve_cmd->add_option("--dt", evolve.dt, "RK4 step");
    evolve.t_max_opt = evolve_cmd->add_option("--t-max", evolve.t_max, "end time, default 40/gamma");
    evolve.window_opt = evolve_cmd->add_option("--window", evolve.window,
                                               "steady-state averaging window, default 10/gamma");
    evolve_cmd->add_option("--stride", evolve.stride, "keep every stride-th step");
    add_common_options(evolve_cmd, evolve.common);

    EquivalenceOptions equiv;
    CLI::App* equivalence_cmd =
        app.add_subcommand("equivalence", "compare both transmittance routes on a grid");
    add_wire_options(equivalence_cmd, equiv.wire);
    add_grid_options(equivalence_cmd, equiv.grid);
    add_common_options(equivalence_cmd, equiv.common);

    try {
        std::vector<std::string> argv = args;
        inject_config(app, argv);
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        const CommonOptions* common = nullptr;
        std::string text;
        if (identity_cmd->parsed()) {
            text = run_identity(identity);
            common = &identity.common;
        } else if (spectrum_cmd->parsed()) {
            text = run_spectrum(spectrum_opts);
            common = &spectrum_opts.common;
        } else if (current_cmd->parsed()) {
            text = run_current(current);
            common = &current.common;
        } else if (evolve_cmd->parsed()) {
            text = run_evolve(evolve);
            common = &evolve.common;
        } else {
            text = run_equivalence(equiv);
            common = &equiv.common;
        }
        emit(*common, text, out);
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace qwire::cli
