// Copyright 2026 The covbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

namespace covbell::cli {
namespace {

using nlohmann::json;

BellKind parse_state(const std::string& text) {
    if (const auto kind = parse_bell_kind(text)) return *kind;
    throw ConfigError("unknown state '" + text + "' (expected phi+, phi-, psi+ or psi-)");
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw ConfigError("unknown format '" + text + "' (expected csv or json)");
}

json optional_number(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

json setting_json(const ChshSetting& s) {
    const auto axis = [](const MeasurementAxis& a) { return json::array({a.x(), a.y(), a.z()}); };
    return json{{"a1", axis(s.a1)}, {"a2", axis(s.a2)}, {"b1", axis(s.b1)}, {"b2", axis(s.b2)}};
}

std::string axis_text(const MeasurementAxis& a) {
    return fmt::format("({:+.12f}, {:+.12f}, {:+.12f})", a.x(), a.y(), a.z());
}

void emit(const std::string& contents, const std::optional<std::filesystem::path>& output, std::ostream& out) {
    if (output) {
        write_atomically(*output, contents);
    } else {
        out << contents;
    }
}

int cmd_sweep(SweepConfig config, const std::string& observable, const std::string& format,
              const std::string& state, std::ostream& out, std::ostream& err) {
    config.state = parse_state(state);
    config.format = parse_format(format);
    if (observable == "covariant") {
        config.czachor = false;
    } else if (observable == "czachor") {
        config.covariant = false;
    } else if (observable != "both") {
        throw ConfigError("unknown observable '" + observable + "' (expected covariant, czachor or both)");
    }
    validate(config);
    if (config.czachor && config.state != BellKind::PsiMinus) {
        err << "note: the Czachor curve is only defined for psi-; chsh_czachor left empty\n";
    }
    const std::vector<SweepRow> rows = compute_sweep(config);
    emit(config.format == OutputFormat::Csv ? render_csv(rows) : render_json(rows), config.output, out);
    return kExitOk;
}

int cmd_verify(const std::optional<double>& tolerance, const std::string& grid_name, const std::string& format,
               const std::optional<std::filesystem::path>& output, std::ostream& out) {
    VerifyConfig config;
    if (grid_name == "coarse") {
        config.grid = VerifyGrid::Coarse;
    } else if (grid_name != "full") {
        throw ConfigError("unknown grid '" + grid_name + "' (expected full or coarse)");
    }
    if (tolerance) {
        if (!(*tolerance > 0.0) || !std::isfinite(*tolerance)) throw ConfigError("--tolerance must be positive");
        config.tolerance = tolerance;
    }
    const OutputFormat fmt_kind = parse_format(format);
    const VerificationSummary summary = run_verification(config);
    const std::string report = render_verify_json(summary, config.grid);
    if (output) write_atomically(*output, report);
    out << (fmt_kind == OutputFormat::Json ? report : render_verify_table(summary));
    return summary.all_pass() ? kExitOk : kExitComputeError;
}

int cmd_critical_beta(double delta, const std::string& format, std::ostream& out) {
    const OutputFormat fmt_kind = parse_format(format);
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw ConfigError("--delta must be finite and non-negative");
    const CriticalBeta result = critical_beta(delta);
    if (fmt_kind == OutputFormat::Json) {
        out << json{{"delta", delta}, {"beta_c", result.beta}, {"chsh", result.chsh}, {"residual", result.residual}}
                   .dump(2)
            << '\n';
    } else {
        out << fmt::format("delta      {}\nbeta_c     {:.10f}\nchsh       {}\nresidual   {:.3e}\n",
                           format_number(delta), result.beta, format_number(result.chsh), result.residual);
    }
    return kExitOk;
}

struct OptimizeArgs {
    std::string state = "psi-";
    std::optional<double> omega;
    std::optional<double> beta;
    std::optional<double> alpha;
    std::optional<double> delta;
    std::string format = "csv";
};

int cmd_optimize(const OptimizeArgs& args, std::ostream& out, std::ostream& err) {
    const BellKind kind = parse_state(args.state);
    const OutputFormat fmt_kind = parse_format(args.format);
    double omega = 0.0;
    if (args.omega) {
        if (args.beta || args.alpha) throw ConfigError("--omega cannot be combined with --beta/--alpha");
        if (!std::isfinite(*args.omega)) throw ConfigError("--omega must be finite");
        omega = *args.omega;
    } else if (args.beta || args.alpha) {
        if (!args.delta) throw ConfigError("--delta is required with --beta/--alpha");
        const double alpha = args.beta ? rapidity_from_beta(*args.beta) : *args.alpha;
        omega = wigner_angle_closed_form(alpha, *args.delta);
    }
    const OptimizedSetting best = optimize_axes(kind, omega);
    const bool agree = std::abs(best.value - best.horodecki_bound) <= kDefaultTolerances.consistency;

    if (fmt_kind == OutputFormat::Json) {
        out << json{{"state", to_string(kind)},
                    {"omega_rad", omega},
                    {"setting", setting_json(best.setting)},
                    {"chsh", best.value},
                    {"horodecki_bound", best.horodecki_bound},
                    {"iterations", best.iterations},
                    {"agree", agree}}
                   .dump(2)
            << '\n';
    } else {
        out << fmt::format("state            {}\nomega_rad        {}\n", to_string(kind), format_number(omega));
        out << "a1               " << axis_text(best.setting.a1) << '\n'
            << "a2               " << axis_text(best.setting.a2) << '\n'
            << "b1               " << axis_text(best.setting.b1) << '\n'
            << "b2               " << axis_text(best.setting.b2) << '\n';
        out << fmt::format("chsh             {}\nhorodecki_bound  {}\niterations       {}\n",
                           format_number(best.value), format_number(best.horodecki_bound), best.iterations);
    }
    if (!agree) {
        err << "error: optimised value differs from the Horodecki bound by "
            << std::abs(best.value - best.horodecki_bound) << '\n';
        return kExitComputeError;
    }
    return kExitOk;
}

}  // namespace

void validate(const SweepConfig& c) {
    if (!(c.beta_min >= 0.0 && c.beta_min < c.beta_max && c.beta_max < 1.0)) {
        throw ConfigError("beta range must satisfy 0 <= beta-min < beta-max < 1");
    }
    if (c.beta_steps < 2) throw ConfigError("--beta-steps must be at least 2");
    if (c.deltas.empty()) throw ConfigError("at least one --delta is required");
    for (double d : c.deltas) {
        if (!(d >= 0.0) || !std::isfinite(d)) throw ConfigError("--delta values must be finite and non-negative");
    }
    if (!c.covariant && !c.czachor) throw ConfigError("no observable selected");
}

std::vector<SweepRow> compute_sweep(const SweepConfig& config) {
    validate(config);
    const ChshSetting axes = canonical_axes(config.state);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(config.beta_steps) * config.deltas.size());
    for (double beta : linspace(config.beta_min, config.beta_max, config.beta_steps)) {
        const double alpha = rapidity_from_beta(beta);
        for (double delta : config.deltas) {
            SweepRow row{beta, alpha, delta, wigner_angle_closed_form(alpha, delta), std::nullopt, std::nullopt};
            if (config.covariant) row.chsh_covariant = chsh_value(config.state, axes, row.omega).value;
            if (config.czachor && config.state == BellKind::PsiMinus) row.chsh_czachor = czachor_chsh(beta, delta);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_number(double value) {
    return fmt::format("{:.17g}", value);
}

std::string render_csv(const std::vector<SweepRow>& rows) {
    std::string out = std::string(kSweepHeader) + "\n";
    const auto field = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    for (const SweepRow& r : rows) {
        out += fmt::format("{},{},{},{},{},{}\n", format_number(r.beta), format_number(r.alpha),
                           format_number(r.delta), format_number(r.omega), field(r.chsh_covariant),
                           field(r.chsh_czachor));
    }
    return out;
}

std::string render_json(const std::vector<SweepRow>& rows) {
    json columns = json::array({"beta", "alpha", "delta", "omega_rad", "chsh_covariant", "chsh_czachor"});
    json data = json::array();
    for (const SweepRow& r : rows) {
        data.push_back(json{{"beta", r.beta},
                            {"alpha", r.alpha},
                            {"delta", r.delta},
                            {"omega_rad", r.omega},
                            {"chsh_covariant", optional_number(r.chsh_covariant)},
                            {"chsh_czachor", optional_number(r.chsh_czachor)}});
    }
    return json{{"columns", columns}, {"rows", data}}.dump(2) + "\n";
}

namespace {

struct QuantityStats {
    std::size_t checks = 0;
    std::size_t failed = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
};

std::vector<std::pair<std::string, QuantityStats>> group_reports(const VerificationSummary& summary) {
    std::vector<std::pair<std::string, QuantityStats>> groups;
    for (const OracleReport& r : summary.reports) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == r.quantity; });
        if (it == groups.end()) {
            groups.emplace_back(r.quantity, QuantityStats{});
            it = std::prev(groups.end());
        }
        QuantityStats& s = it->second;
        ++s.checks;
        if (!r.pass) ++s.failed;
        s.max_error = std::max(s.max_error, r.abs_error);
        s.tolerance = r.tolerance;
    }
    return groups;
}

}  // namespace

std::string render_verify_table(const VerificationSummary& summary) {
    std::string out = fmt::format("{:<24} {:>7} {:>7} {:>14} {:>10}  {}\n", "quantity", "checks", "failed",
                                  "max_abs_error", "tolerance", "verdict");
    for (const auto& [name, s] : group_reports(summary)) {
        out += fmt::format("{:<24} {:>7} {:>7} {:>14.3e} {:>10.1e}  {}\n", name, s.checks, s.failed, s.max_error,
                           s.tolerance, s.failed == 0 ? "PASS" : "FAIL");
    }
    constexpr std::size_t kMaxListed = 10;
    std::size_t listed = 0;
    for (const OracleReport& r : summary.reports) {
        if (r.pass) continue;
        if (listed++ == kMaxListed) {
            out += fmt::format("  ... {} more failures\n", summary.failures() - kMaxListed);
            break;
        }
        out += fmt::format("  FAIL {} [{}] closed={} brute={} err={:.3e}\n", r.quantity, r.parameters,
                           format_number(r.closed_form), format_number(r.brute_force), r.abs_error);
    }
    out += fmt::format("{}: {} of {} checks passed\n", summary.all_pass() ? "PASS" : "FAIL",
                       summary.reports.size() - summary.failures(), summary.reports.size());
    return out;
}

std::string render_verify_json(const VerificationSummary& summary, VerifyGrid grid) {
    json groups = json::array();
    for (const auto& [name, s] : group_reports(summary)) {
        groups.push_back(json{{"quantity", name},
                              {"checks", s.checks},
                              {"failed", s.failed},
                              {"max_abs_error", s.max_error},
                              {"tolerance", s.tolerance}});
    }
    json reports = json::array();
    for (const OracleReport& r : summary.reports) {
        reports.push_back(json{{"quantity", r.quantity},
                               {"parameters", r.parameters},
                               {"closed_form", r.closed_form},
                               {"brute_force", r.brute_force},
                               {"abs_error", r.abs_error},
                               {"tolerance", r.tolerance},
                               {"pass", r.pass}});
    }
    return json{{"all_pass", summary.all_pass()},
                {"grid", grid == VerifyGrid::Full ? "full" : "coarse"},
                {"summary", groups},
                {"reports", reports}}
               .dump(2) +
           "\n";
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw ConfigError("cannot open '" + tmp.string() + "' for writing");
        file << contents;
        file.flush();
        if (!file) {
            file.close();
            std::filesystem::remove(tmp);
            throw ConfigError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ConfigError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covariant Bell/CHSH analysis of Lorentz-boosted spin-1/2 pairs"};
    app.require_subcommand(1);

    SweepConfig sweep;
    std::string sweep_state = "psi-";
    std::string sweep_observable = "both";
    std::string sweep_format = "csv";
    std::string sweep_output;
    auto* sweep_cmd = app.add_subcommand("sweep", "CHSH values over a grid of observer boost speeds");
    sweep_cmd->add_option("--beta-min", sweep.beta_min, "Smallest boost speed")->capture_default_str();
    sweep_cmd->add_option("--beta-max", sweep.beta_max, "Largest boost speed (< 1)")->capture_default_str();
    sweep_cmd->add_option("--beta-steps", sweep.beta_steps, "Number of grid points (>= 2)")->capture_default_str();
    sweep_cmd->add_option("--delta", sweep.deltas, "Particle rapidity; repeat or comma-separate for a grid")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--state", sweep_state, "phi+ | phi- | psi+ | psi-")->capture_default_str();
    sweep_cmd->add_option("--observable", sweep_observable, "covariant | czachor | both")->capture_default_str();
    sweep_cmd->add_option("--output", sweep_output, "Output file (default: stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv | json")->capture_default_str();

    std::optional<double> verify_tolerance;
    std::string verify_grid = "full";
    std::string verify_format = "csv";
    std::string verify_output;
    auto* verify_cmd = app.add_subcommand("verify", "Check every closed form against its brute-force oracle");
    verify_cmd->add_option("--tolerance", verify_tolerance, "Override every oracle tolerance");
    verify_cmd->add_option("--grid", verify_grid, "full | coarse")->capture_default_str();
    verify_cmd->add_option("--format", verify_format, "csv (table) | json")->capture_default_str();
    verify_cmd->add_option("--output", verify_output, "Also write the JSON report to this file");

    double critical_delta = 1.0;
    std::string critical_format = "csv";
    auto* critical_cmd = app.add_subcommand("critical-beta", "Boost speed where the Czachor CHSH value reaches 2");
    critical_cmd->add_option("--delta", critical_delta, "Particle rapidity")->capture_default_str();
    critical_cmd->add_option("--format", critical_format, "csv (text) | json")->capture_default_str();

    OptimizeArgs optimize;
    auto* optimize_cmd = app.add_subcommand("optimize", "Numerically maximise CHSH over the measurement axes");
    optimize_cmd->add_option("--state", optimize.state, "phi+ | phi- | psi+ | psi-")->capture_default_str();
    optimize_cmd->add_option("--omega", optimize.omega, "Wigner angle in radians (default 0)");
    auto* beta_opt = optimize_cmd->add_option("--beta", optimize.beta, "Observer boost speed");
    auto* alpha_opt = optimize_cmd->add_option("--alpha", optimize.alpha, "Observer boost rapidity");
    beta_opt->excludes(alpha_opt);
    optimize_cmd->add_option("--delta", optimize.delta, "Particle rapidity");
    optimize_cmd->add_option("--format", optimize.format, "csv (text) | json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*sweep_cmd) {
            if (!sweep_output.empty()) sweep.output = sweep_output;
            return cmd_sweep(sweep, sweep_observable, sweep_format, sweep_state, out, err);
        }
        if (*verify_cmd) {
            std::optional<std::filesystem::path> path;
            if (!verify_output.empty()) path = verify_output;
            return cmd_verify(verify_tolerance, verify_grid, verify_format, path, out);
        }
        if (*critical_cmd) return cmd_critical_beta(critical_delta, critical_format, out);
        if (*optimize_cmd) return cmd_optimize(optimize, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const NoCrossingError& e) {
        err << "no crossing: " << e.what() << '\n';
        return kExitNoCrossing;
    } catch (const ConvergenceError& e) {
        err << "non-convergence: " << e.what() << '\n';
        return kExitComputeError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputeError;
    }
    return kExitConfigError;
}

}  // namespace covbell::cli
