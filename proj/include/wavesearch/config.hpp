// config.hpp — experiment description: key = value file plus overrides
#pragma once

#include "wavesearch/dynamics.hpp"
#include "wavesearch/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wavesearch {

enum class RunMode { Simulate, CompareRwa, Scan, SpectrumStats, FieldSnapshot };

struct ExperimentConfig {
    RunMode mode = RunMode::Simulate;
    SpectrumKind kind = SpectrumKind::Linear;
    std::vector<Index64> custom_indices;          // spectrum = custom
    Eigen::Index set_size = 100;                  // N
    double omega0 = 1.0;
    std::optional<Index64> initial_index;         // j override
    std::optional<Eigen::Index> searched_position;
    std::optional<double> searched_frequency;
    double t_max_tau = 2.2;
    int samples_per_fastest_period = 32;
    Eigen::Index record_stride = 0;               // 0 = auto
    std::int64_t max_steps = 100'000'000;
    double v0_band = 0.0;                         // randomized v(0); 0 = canonical
    std::uint64_t v0_seed = 1;
    std::vector<Eigen::Index> scan_sizes{25, 50, 100, 200};
    std::vector<double> snapshot_times_tau{1.0};
    int workers = 1;
    bool verbose_modes = false;
    double rwa_warn_ratio = 20.0;
    std::string out_dir = ".";
};

// Applies one key = value pair; throws ConfigError naming the offending key.
void apply_setting(ExperimentConfig& config, const std::string& key,
                   const std::string& value);

// Parses a key = value file ('#' comments and blank lines ignored) on top of
// the given defaults.
ExperimentConfig load_config_file(const std::string& path,
                                  ExperimentConfig defaults = {});

// Spectrum implied by kind / N / ω₀ / custom indices.
ModeSpectrum build_spectrum(const ExperimentConfig& config);

// Searched position: explicit position wins; otherwise an explicit frequency
// is matched exactly against ω₀ × index; otherwise mid-spectrum ⌊N/2⌋.
Eigen::Index resolve_searched(const ExperimentConfig& config, const ModeSpectrum& spectrum);

// Fully validated SearchProblem implied by the config.
SearchProblem resolve_problem(const ExperimentConfig& config);

// Integrator settings implied by the config for the given problem.
IntegratorConfig resolve_integrator(const ExperimentConfig& config,
                                    const SearchProblem& problem);

const char* run_mode_name(RunMode mode);
const char* spectrum_kind_name(SpectrumKind kind);

}  // namespace wavesearch
