#include "bqlp_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "bqlp/config.hpp"
#include "bqlp/errors.hpp"
#include "bqlp/initial_condition.hpp"
#include "bqlp/littlewood_paley.hpp"
#include "bqlp/plots.hpp"
#include "bqlp/snapshot.hpp"
#include "bqlp/timeseries.hpp"

namespace bqlp::cli {

namespace {

std::string snapshot_name(long sample) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "snapshot_%06ld.bqlp", sample);
    return buf;
}

std::string sanitize(std::string msg) {
    for (char& c : msg) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return msg;
}

void print_status(std::ostream& out, const std::string& status, const std::string& rest = {}) {
    out << "status=" << status;
    if (!rest.empty()) out << ' ' << rest;
    out << '\n';
}

int fail(std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& message) {
    err << "bqlp: " << message << '\n';
    print_status(out, kind, "exit=" + std::to_string(code));
    return code;
}

std::string cutoff_field(const DiagnosticsRecord& r) {
    switch (r.cutoff_status) {
        case CutoffStatus::resolved: return std::to_string(r.q_value);
        case CutoffStatus::unresolved: return "unresolved";
        case CutoffStatus::undefined: return "undefined";
    }
    return "undefined";
}

int cmd_validate(const std::string& path, std::ostream& out) {
    const RunConfig cfg = load_config(path);
    print_status(out, "valid", "n=" + std::to_string(cfg.grid.n) + " t_end=" + format_number(cfg.t_end) +
                                   " dt=" + format_number(cfg.dt) + " exit=0");
    return kExitOk;
}

int cmd_run(const std::string& path, const std::optional<std::string>& output_override, std::ostream& out,
            std::ostream& err) {
    RunConfig cfg = load_config(path);
    if (output_override) cfg.output.directory = *output_override;
    const auto dir = cfg.output.directory;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    const SolverState initial = make_initial_state(cfg.grid, cfg.initial);
    long sample = 0;
    auto observer = [&](const SolverState& state, const DiagnosticsRecord&, long) {
        if (cfg.output.snapshot_stride > 0 && sample % cfg.output.snapshot_stride == 0) {
            save_snapshot(state, cfg.nu, cfg.kappa, dir / snapshot_name(sample));
        }
        ++sample;
    };
    const MonitoredRun result = run_monitored(cfg.solver_params(), initial, cfg.diagnostics_settings(), observer);

    save_snapshot(result.run.final_state, cfg.nu, cfg.kappa, dir / "final.bqlp");
    if (cfg.output.csv) write_timeseries(result.ledger, dir / "timeseries.csv");
    if (cfg.output.svg) emit_plots(result.ledger, dir);

    const bool ok = result.run.status == RunStatus::completed;
    if (!ok) err << "bqlp: run terminated: " << sanitize(result.run.message) << '\n';
    const int code = ok ? kExitOk : kExitRuntime;
    print_status(out, to_string(result.run.status),
                 "t=" + format_number(result.run.final_state.t) + " steps=" + std::to_string(result.run.steps) +
                     " samples=" + std::to_string(result.ledger.samples.size()) +
                     " int_f=" + format_number(result.ledger.integral_f) +
                     " int_bkm=" + format_number(result.ledger.integral_bkm) + " exit=" + std::to_string(code));
    return code;
}

int cmd_analyze(const std::vector<std::string>& paths, const AnalyzeOptions& options, std::ostream& out) {
    regularity_monitor(options.s, options.sigma);
    if (!(options.c > 0.0) || !std::isfinite(options.c)) throw ParameterError("--c must be a positive number");
    for (const auto& p : paths) {
        const DiagnosticsRecord r = analyze_snapshot(p, options);
        out << "snapshot=" << p << " t=" << format_number(r.t) << " energy_u=" << format_number(r.energy_u)
            << " energy_theta=" << format_number(r.energy_theta) << " hs_u=" << format_number(r.hs_u)
            << " hsigma_theta=" << format_number(r.hsigma_theta) << " Q=" << cutoff_field(r)
            << " lambda=" << format_number(r.cutoff_status == CutoffStatus::resolved ? r.lambda_value : std::nan(""))
            << " f=" << format_number(r.f) << " besov=" << format_number(r.besov_full)
            << " bkm=" << format_number(r.bkm) << " i1=" << format_number(r.flux.i1)
            << " i2=" << format_number(r.flux.i2) << " i3=" << format_number(r.flux.i3) << '\n';
    }
    print_status(out, "analyzed", "snapshots=" + std::to_string(paths.size()) + " exit=0");
    return kExitOk;
}

int cmd_plot(const std::string& csv, const std::optional<std::string>& output_override, std::ostream& out) {
    const auto rows = read_timeseries(csv);
    const std::filesystem::path dir =
        output_override ? std::filesystem::path(*output_override) : std::filesystem::path(csv).parent_path();
    const auto written = emit_plots(rows, dir.empty() ? std::filesystem::path(".") : dir);
    print_status(out, "plotted", "rows=" + std::to_string(rows.size()) + " files=" +
                                     std::to_string(written.size()) + " exit=0");
    return kExitOk;
}

}  // namespace

DiagnosticsRecord analyze_snapshot(const std::filesystem::path& path, const AnalyzeOptions& options) {
    const Snapshot snap = load_snapshot(path);
    DiagnosticsSettings settings;
    settings.nu = options.nu.value_or(snap.nu);
    settings.kappa = options.kappa.value_or(snap.kappa);
    settings.c = options.c;
    settings.s = options.s;
    settings.sigma = options.sigma;
    settings.compute_fluxes = options.fluxes;
    const lp::DyadicSymbolFamily family(snap.state.grid());
    return compute_record(family, snap.state, settings);
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boussinesq pseudo-spectral solver with Littlewood-Paley regularity diagnostics", "bqlp"};
    app.require_subcommand(1);

    std::string run_config;
    std::optional<std::string> run_output;
    auto* run = app.add_subcommand("run", "Integrate a configured run and record diagnostics");
    run->add_option("config", run_config, "JSON run configuration")->required();
    run->add_option("-o,--output", run_output, "Override output.directory");

    std::vector<std::string> snapshots;
    AnalyzeOptions analyze_opts;
    bool no_fluxes = false;
    auto* analyze = app.add_subcommand("analyze", "Diagnostics of saved snapshots");
    analyze->add_option("snapshots", snapshots, "Snapshot files")->required();
    analyze->add_option("--s", analyze_opts.s, "Velocity Sobolev exponent");
    analyze->add_option("--sigma", analyze_opts.sigma, "Temperature Sobolev exponent");
    analyze->add_option("--c", analyze_opts.c, "Cutoff constant");
    analyze->add_option("--nu", analyze_opts.nu, "Override the stored viscosity");
    analyze->add_option("--kappa", analyze_opts.kappa, "Override the stored diffusivity");
    analyze->add_flag("--no-fluxes", no_fluxes, "Skip the flux terms");

    std::string plot_csv;
    std::optional<std::string> plot_output;
    auto* plot = app.add_subcommand("plot", "Render charts from a timeseries CSV");
    plot->add_option("csv", plot_csv, "timeseries.csv")->required();
    plot->add_option("-o,--output", plot_output, "Output directory (default: next to the CSV)");

    std::string validate_config;
    auto* validate = app.add_subcommand("validate", "Check a run configuration");
    validate->add_option("config", validate_config, "JSON run configuration")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        print_status(out, "help", "exit=0");
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        print_status(out, "help", "exit=0");
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "bqlp: " << e.what() << '\n' << app.help();
        print_status(out, "usage_error", "exit=1");
        return kExitInvalid;
    }

    try {
        if (*validate) return cmd_validate(validate_config, out);
        if (*run) return cmd_run(run_config, run_output, out, err);
        if (*analyze) {
            analyze_opts.fluxes = !no_fluxes;
            return cmd_analyze(snapshots, analyze_opts, out);
        }
        if (*plot) return cmd_plot(plot_csv, plot_output, out);
    } catch (const ConfigError& e) {
        return fail(out, err, kExitInvalid, "invalid_config", sanitize(e.what()));
    } catch (const ParameterError& e) {
        return fail(out, err, kExitInvalid, "invalid_parameter", sanitize(e.what()));
    } catch (const SnapshotError& e) {
        return fail(out, err, kExitInvalid, "invalid_snapshot", sanitize(e.what()));
    } catch (const CflError& e) {
        return fail(out, err, kExitRuntime, "cfl_failure", sanitize(e.what()));
    } catch (const std::exception& e) {
        return fail(out, err, kExitRuntime, "runtime_error", sanitize(e.what()));
    }
    err << app.help();
    print_status(out, "usage_error", "exit=1");
    return kExitInvalid;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace bqlp::cli
