// wavesearch — batch experiment driver around the resonant mode-search library.
// Subcommands: simulate, compare-rwa, scan, spectrum-stats, field-snapshot.
// Exit codes: 0 success, 2 config error, 3 numerical failure, 4 I/O error.

#include "wavesearch/analysis.hpp"
#include "wavesearch/config.hpp"
#include "wavesearch/csv.hpp"
#include "wavesearch/dynamics.hpp"
#include "wavesearch/field.hpp"
#include "wavesearch/rwa.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace ws = wavesearch;
namespace fs = std::filesystem;

namespace {

struct RawOverrides {
    std::vector<std::pair<std::string, std::string>> pairs;

    void add_flag(CLI::App* cmd, const std::string& flag, const std::string& key,
                  const std::string& description) {
        cmd->add_option_function<std::string>(
               flag,
               [this, key](const std::string& value) { pairs.emplace_back(key, value); },
               description)
            ->type_name("VALUE");
    }
};

void add_common_options(CLI::App* cmd, RawOverrides& overrides) {
    overrides.add_flag(cmd, "--spectrum", "spectrum", "linear | quadratic | custom");
    overrides.add_flag(cmd, "--indices", "indices", "custom spectrum index list, e.g. 1,4,9");
    overrides.add_flag(cmd, "--n", "n", "search set size N");
    overrides.add_flag(cmd, "--omega0", "omega0", "base frequency ω₀");
    overrides.add_flag(cmd, "--initial-index", "initial_index", "initial mode index j");
    overrides.add_flag(cmd, "--searched-pos", "searched_position",
                       "searched mode position (0-based)");
    overrides.add_flag(cmd, "--searched-freq", "searched_frequency",
                       "searched mode frequency (must match a mode exactly)");
    overrides.add_flag(cmd, "--t-max-tau", "t_max_tau", "integration span in units of τ");
    overrides.add_flag(cmd, "--dt-samples", "samples_per_fastest_period",
                       "integration samples per fastest period");
    overrides.add_flag(cmd, "--record-stride", "record_stride",
                       "record every k-th step (0 = auto)");
    overrides.add_flag(cmd, "--max-steps", "max_steps", "hard cap on total steps");
    overrides.add_flag(cmd, "--v0-band", "v0_band",
                       "randomize v(0) uniformly in [-band, band] (0 = zeros)");
    overrides.add_flag(cmd, "--v0-seed", "v0_seed", "seed for the randomized v(0)");
    overrides.add_flag(cmd, "--workers", "workers", "parallel workers for scan");
    overrides.add_flag(cmd, "--verbose-modes", "verbose_modes",
                       "record and export the full per-mode series");
    overrides.add_flag(cmd, "--out-dir", "out_dir", "output directory for artifacts");
    overrides.add_flag(cmd, "--rwa-warn-ratio", "rwa_warn_ratio",
                       "warn when min ω_n / Ω falls below this");
}

std::string fmt(double x) { return ws::format_value(x); }

void emit(const std::string& key, const std::string& value) {
    std::cout << key << " = " << value << '\n';
}

ws::HeaderBlock config_header(const ws::ExperimentConfig& config) {
    ws::HeaderBlock h;
    h.emplace_back("mode", ws::run_mode_name(config.mode));
    h.emplace_back("spectrum", ws::spectrum_kind_name(config.kind));
    if (config.kind == ws::SpectrumKind::Custom) {
        std::string joined;
        for (const auto idx : config.custom_indices) {
            if (!joined.empty()) joined += ',';
            joined += std::to_string(idx);
        }
        h.emplace_back("indices", joined);
    } else {
        h.emplace_back("n", std::to_string(config.set_size));
    }
    h.emplace_back("omega0", fmt(config.omega0));
    if (config.initial_index) h.emplace_back("initial_index", std::to_string(*config.initial_index));
    if (config.searched_position) {
        h.emplace_back("searched_position", std::to_string(*config.searched_position));
    }
    if (config.searched_frequency) {
        h.emplace_back("searched_frequency", fmt(*config.searched_frequency));
    }
    h.emplace_back("t_max_tau", fmt(config.t_max_tau));
    h.emplace_back("samples_per_fastest_period",
                   std::to_string(config.samples_per_fastest_period));
    h.emplace_back("record_stride", std::to_string(config.record_stride));
    h.emplace_back("max_steps", std::to_string(config.max_steps));
    h.emplace_back("v0_band", fmt(config.v0_band));
    h.emplace_back("v0_seed", std::to_string(config.v0_seed));
    h.emplace_back("verbose_modes", config.verbose_modes ? "true" : "false");
    return h;
}

// resolved-problem lines shared by the simulation-style modes
void append_problem_header(ws::HeaderBlock& header, const ws::SearchProblem& problem) {
    header.emplace_back("resolved_initial_index", std::to_string(problem.initial_index));
    header.emplace_back("resolved_searched_position",
                        std::to_string(problem.searched_position));
    header.emplace_back("resolved_searched_index",
                        std::to_string(problem.searched_index()));
    header.emplace_back("omega_sj", fmt(problem.drive_frequency()));
    header.emplace_back("tau", fmt(ws::optimal_time(problem)));
    header.emplace_back("rabi_frequency", fmt(ws::rabi_frequency(problem)));
}

std::string artifact_path(const ws::ExperimentConfig& config, const std::string& name) {
    fs::path dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ws::IoError("cannot create output directory '" + config.out_dir + "'");
    return (dir / name).string();
}

ws::AmplitudeState make_initial(const ws::ExperimentConfig& config,
                                const ws::SearchProblem& problem) {
    if (config.v0_band > 0.0) {
        return ws::randomized_initial(problem, config.v0_band, config.v0_seed);
    }
    return ws::default_initial(problem);
}

void report_validity(const ws::ExperimentConfig& config, const ws::SearchProblem& problem) {
    const double ratio = ws::validity_ratio(problem);
    emit("rwa_validity_ratio", fmt(ratio));
    if (ratio < config.rwa_warn_ratio) {
        emit("rwa_validity_warning",
             "ratio below " + fmt(config.rwa_warn_ratio) + "; two-level prediction degraded");
    }
}

int run_simulate(const ws::ExperimentConfig& config) {
    const ws::SearchProblem problem = ws::resolve_problem(config);
    const ws::IntegratorConfig icfg = ws::resolve_integrator(config, problem);
    const ws::Trajectory trajectory =
        ws::integrate(problem, icfg, make_initial(config, problem));

    ws::HeaderBlock header = config_header(config);
    append_problem_header(header, problem);
    header.emplace_back("dt", fmt(trajectory.dt));

    const std::string path = artifact_path(config, "trajectory.csv");
    const ws::IndexList joint = ws::joint_indices(problem);
    ws::write_trajectory_csv(path, trajectory, header,
                             config.verbose_modes ? &joint : nullptr);

    const ws::PeakReport peak = ws::find_peak(trajectory);
    emit("artifact", path);
    emit("tau", fmt(trajectory.tau));
    emit("dt", fmt(trajectory.dt));
    emit("records", std::to_string(trajectory.sample_count()));
    emit("peak_t_star", fmt(peak.t_star));
    emit("peak_t_star_over_tau", fmt(peak.t_star_over_tau));
    emit("peak_p_star", fmt(peak.p_star));
    emit("norm_deviation_max", fmt(ws::norm_deviation(trajectory)));
    emit("spectator_max", fmt(trajectory.p_spectator_max.maxCoeff()));
    report_validity(config, problem);
    return 0;
}

int run_compare_rwa(const ws::ExperimentConfig& config) {
    const ws::SearchProblem problem = ws::resolve_problem(config);
    const ws::IntegratorConfig icfg = ws::resolve_integrator(config, problem);
    const ws::Trajectory trajectory =
        ws::integrate(problem, icfg, make_initial(config, problem));
    const ws::RwaModel model = ws::build_rwa(problem);

    ws::HeaderBlock header = config_header(config);
    append_problem_header(header, problem);
    header.emplace_back("dt", fmt(trajectory.dt));

    const std::string path = artifact_path(config, "compare.csv");
    ws::write_compare_csv(path, trajectory, model, header);

    const ws::PeakReport peak = ws::find_peak(trajectory);
    emit("artifact", path);
    emit("tau", fmt(model.tau));
    emit("rabi_frequency", fmt(model.rabi));
    emit("peak_t_star_over_tau", fmt(peak.t_star_over_tau));
    emit("peak_p_star", fmt(peak.p_star));
    emit("rwa_deviation_sup", fmt(ws::rwa_deviation(trajectory, model)));
    report_validity(config, problem);
    return 0;
}

int run_scan(const ws::ExperimentConfig& config) {
    if (config.kind == ws::SpectrumKind::Custom) {
        throw ws::ConfigError("config: key 'spectrum': scan needs linear or quadratic");
    }
    ws::ScanConfig scan;
    scan.omega0 = config.omega0;
    scan.t_max_tau = std::max(config.t_max_tau, 1.3);
    scan.samples_per_fastest_period = config.samples_per_fastest_period;
    scan.record_stride = config.record_stride;
    scan.max_steps = config.max_steps;
    scan.workers = config.workers;
    const ws::ScalingReport report =
        ws::scaling_study(config.kind, config.scan_sizes, scan);

    ws::HeaderBlock header = config_header(config);
    {
        std::string joined;
        for (const auto n : config.scan_sizes) {
            if (!joined.empty()) joined += ',';
            joined += std::to_string(n);
        }
        header.emplace_back("scan_sizes", joined);
    }
    const std::string path = artifact_path(config, "scaling.csv");
    ws::write_scaling_csv(path, report, header);

    emit("artifact", path);
    emit("rows", std::to_string(report.rows.size()));
    for (const ws::ScalingRow& row : report.rows) {
        emit("t_star_over_tau_n" + std::to_string(row.set_size), fmt(row.t_star_over_tau));
    }
    if (report.has_fit) {
        emit("alpha", fmt(report.alpha));
        emit("alpha_omega0_over_pi", fmt(report.alpha_omega0_over_pi));
        emit("correlation", fmt(report.correlation));
    } else {
        emit("fit", "skipped (need >= 3 sizes)");
    }
    return 0;
}

int run_spectrum_stats(const ws::ExperimentConfig& config) {
    const ws::SearchProblem problem = ws::resolve_problem(config);
    // the CSV censuses the search set itself (the ω_sn collisions that drive
    // the interference); the joint set including j is summarized on stdout
    const auto histogram = ws::degeneracy_histogram(problem.spectrum.indices);
    const auto joint = ws::degeneracy_histogram(problem);

    ws::HeaderBlock header = config_header(config);
    append_problem_header(header, problem);
    header.emplace_back("census_set", "spectrum");
    const std::string path = artifact_path(config, "degeneracy.csv");
    ws::write_histogram_csv(path, histogram, config.omega0, header);

    ws::Index64 max_multiplicity = 0;
    ws::Index64 collisions = 0;
    for (const auto& [diff, count] : histogram) {
        max_multiplicity = std::max(max_multiplicity, count);
        if (count > 1) ++collisions;
    }
    ws::Index64 joint_max = 0;
    for (const auto& [diff, count] : joint) joint_max = std::max(joint_max, count);
    emit("artifact", path);
    emit("distinct_differences", std::to_string(histogram.size()));
    emit("max_multiplicity", std::to_string(max_multiplicity));
    emit("degenerate_differences", std::to_string(collisions));
    emit("joint_max_multiplicity", std::to_string(joint_max));
    return 0;
}

int run_field_snapshot(const ws::ExperimentConfig& config) {
    const ws::SearchProblem problem = ws::resolve_problem(config);
    const double tau = ws::optimal_time(problem);

    std::vector<double> targets = config.snapshot_times_tau;
    std::sort(targets.begin(), targets.end());
    if (!targets.empty() && targets.front() < 0.0) {
        throw ws::ConfigError("config: key 'snapshot_times_tau': times must be >= 0");
    }

    // geometry consistent with the spectrum's ω₀: L = 2π, c = ω₀
    const ws::IndexList joint = ws::joint_indices(problem);
    ws::FieldGeometry geometry = ws::default_geometry(joint.maxCoeff());
    geometry.wave_speed = config.omega0;

    ws::IntegratorConfig icfg = ws::resolve_integrator(config, problem);
    ws::AmplitudeState state = make_initial(config, problem);

    int written = 0;
    for (std::size_t k = 0; k < targets.size(); ++k) {
        const double t_target = targets[k] * tau;
        if (t_target > state.t) {
            icfg.t_max = t_target - state.t;
            ws::AmplitudeState next;
            ws::integrate(problem, icfg, state, &next);
            state = std::move(next);
        }
        const ws::WaveField field =
            ws::reconstruct(state.a.matrix(), state.t, joint, geometry);

        ws::HeaderBlock header = config_header(config);
        append_problem_header(header, problem);
        header.emplace_back("snapshot_time_tau", fmt(targets[k]));
        header.emplace_back("snapshot_time", fmt(state.t));
        header.emplace_back("grid_intervals", std::to_string(geometry.intervals));

        const std::string path =
            artifact_path(config, "field_" + std::to_string(k) + ".csv");
        ws::write_field_csv(path, field, header);
        emit("artifact_" + std::to_string(k), path);
        emit("snapshot_time_" + std::to_string(k), fmt(state.t));
        ++written;
    }
    emit("snapshots", std::to_string(written));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resonant mode search in coupled classical wave modes"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("-c,--config", config_path, "key = value experiment file")
        ->check(CLI::ExistingFile);

    RawOverrides overrides;
    CLI::App* simulate = app.add_subcommand("simulate", "integrate and export P_n(t)");
    CLI::App* compare = app.add_subcommand("compare-rwa",
                                           "full dynamics vs the two-level prediction");
    CLI::App* scan = app.add_subcommand("scan", "peak-time scaling across N");
    CLI::App* stats = app.add_subcommand("spectrum-stats",
                                         "transition-frequency degeneracy census");
    CLI::App* snapshot = app.add_subcommand("field-snapshot", "spatial Ψ(x,t) export");
    for (CLI::App* cmd : {simulate, compare, scan, stats, snapshot}) {
        add_common_options(cmd, overrides);
    }
    snapshot->add_option_function<std::string>(
        "--times-tau",
        [&overrides](const std::string& v) { overrides.pairs.emplace_back("snapshot_times_tau", v); },
        "snapshot times in units of τ, e.g. 0.5,1.0");
    scan->add_option_function<std::string>(
        "--sizes",
        [&overrides](const std::string& v) { overrides.pairs.emplace_back("scan_sizes", v); },
        "N values to scan, e.g. 25,50,100,200");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        std::cerr << "error kind=config message=\"" << e.what() << "\"\n";
        return 2;
    }

    try {
        ws::ExperimentConfig config;
        if (!config_path.empty()) config = ws::load_config_file(config_path);
        for (const auto& [key, value] : overrides.pairs) {
            ws::apply_setting(config, key, value);
        }
        if (simulate->parsed()) config.mode = ws::RunMode::Simulate;
        else if (compare->parsed()) config.mode = ws::RunMode::CompareRwa;
        else if (scan->parsed()) config.mode = ws::RunMode::Scan;
        else if (stats->parsed()) config.mode = ws::RunMode::SpectrumStats;
        else if (snapshot->parsed()) config.mode = ws::RunMode::FieldSnapshot;

        switch (config.mode) {
            case ws::RunMode::Simulate: return run_simulate(config);
            case ws::RunMode::CompareRwa: return run_compare_rwa(config);
            case ws::RunMode::Scan: return run_scan(config);
            case ws::RunMode::SpectrumStats: return run_spectrum_stats(config);
            case ws::RunMode::FieldSnapshot: return run_field_snapshot(config);
        }
        std::cerr << "error kind=config message=\"no run mode selected\"\n";
        return 2;
    } catch (const ws::ConfigError& e) {
        std::cerr << "error kind=config message=\"" << e.what() << "\"\n";
        return 2;
    } catch (const ws::NonFiniteError& e) {
        std::cerr << "error kind=numeric message=\"" << e.what() << "\"\n";
        return 3;
    } catch (const ws::StepCapExceeded& e) {
        std::cerr << "error kind=numeric message=\"" << e.what() << "\"\n";
        return 3;
    } catch (const ws::IoError& e) {
        std::cerr << "error kind=io message=\"" << e.what() << "\"\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error kind=internal message=\"" << e.what() << "\"\n";
        return 1;
    }
}
