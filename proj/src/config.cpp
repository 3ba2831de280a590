#include "wavesearch/config.hpp"

#include "wavesearch/rwa.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wavesearch {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void bad(const std::string& key, const std::string& reason) {
    throw ConfigError("config: key '" + key + "': " + reason);
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    std::int64_t out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end) bad(key, "expected an integer, got '" + value + "'");
    return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end) {
        bad(key, "expected a non-negative integer, got '" + value + "'");
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return out;
    } catch (const std::exception&) {
        bad(key, "expected a number, got '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    bad(key, "expected a boolean, got '" + value + "'");
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) bad(key, "empty list element");
        out.push_back(static_cast<T>(parse(key, item)));
    }
    if (out.empty()) bad(key, "empty list");
    return out;
}

}  // namespace

void apply_setting(ExperimentConfig& config, const std::string& raw_key,
                   const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key.empty()) throw ConfigError("config: empty key");

    if (key == "mode") {
        if (value == "simulate") config.mode = RunMode::Simulate;
        else if (value == "compare-rwa") config.mode = RunMode::CompareRwa;
        else if (value == "scan") config.mode = RunMode::Scan;
        else if (value == "spectrum-stats") config.mode = RunMode::SpectrumStats;
        else if (value == "field-snapshot") config.mode = RunMode::FieldSnapshot;
        else bad(key, "unknown mode '" + value + "'");
    } else if (key == "spectrum") {
        if (value == "linear") config.kind = SpectrumKind::Linear;
        else if (value == "quadratic") config.kind = SpectrumKind::Quadratic;
        else if (value == "custom") config.kind = SpectrumKind::Custom;
        else bad(key, "expected linear|quadratic|custom");
    } else if (key == "indices") {
        config.custom_indices = parse_list<Index64>(key, value, parse_int);
    } else if (key == "n") {
        const auto n = parse_int(key, value);
        if (n < 2) bad(key, "need N >= 2");
        config.set_size = static_cast<Eigen::Index>(n);
    } else if (key == "omega0") {
        const double w = parse_double(key, value);
        if (!(w > 0.0)) bad(key, "base frequency must be > 0");
        config.omega0 = w;
    } else if (key == "initial_index") {
        const auto j = parse_int(key, value);
        if (j < 1) bad(key, "initial index must be >= 1");
        config.initial_index = j;
    } else if (key == "searched_position") {
        const auto p = parse_int(key, value);
        if (p < 0) bad(key, "position must be >= 0");
        config.searched_position = static_cast<Eigen::Index>(p);
    } else if (key == "searched_frequency") {
        config.searched_frequency = parse_double(key, value);
    } else if (key == "t_max_tau") {
        const double t = parse_double(key, value);
        if (!(t >= 0.0)) bad(key, "must be >= 0");
        config.t_max_tau = t;
    } else if (key == "samples_per_fastest_period") {
        const auto s = parse_int(key, value);
        if (s < 1) bad(key, "must be >= 1");
        config.samples_per_fastest_period = static_cast<int>(s);
    } else if (key == "record_stride") {
        const auto s = parse_int(key, value);
        if (s < 0) bad(key, "must be >= 0 (0 = auto)");
        config.record_stride = static_cast<Eigen::Index>(s);
    } else if (key == "max_steps") {
        const auto s = parse_int(key, value);
        if (s < 1) bad(key, "must be >= 1");
        config.max_steps = s;
    } else if (key == "v0_band") {
        const double b = parse_double(key, value);
        if (b < 0.0) bad(key, "must be >= 0");
        config.v0_band = b;
    } else if (key == "v0_seed") {
        config.v0_seed = parse_uint(key, value);
    } else if (key == "scan_sizes") {
        config.scan_sizes = parse_list<Eigen::Index>(key, value, parse_int);
    } else if (key == "snapshot_times_tau") {
        config.snapshot_times_tau = parse_list<double>(key, value, parse_double);
    } else if (key == "workers") {
        const auto w = parse_int(key, value);
        if (w < 1) bad(key, "must be >= 1");
        config.workers = static_cast<int>(w);
    } else if (key == "verbose_modes") {
        config.verbose_modes = parse_bool(key, value);
    } else if (key == "rwa_warn_ratio") {
        config.rwa_warn_ratio = parse_double(key, value);
    } else if (key == "out_dir") {
        if (value.empty()) bad(key, "empty path");
        config.out_dir = value;
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig defaults) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read file '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: " + path + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        apply_setting(defaults, stripped.substr(0, eq), stripped.substr(eq + 1));
    }
    return defaults;
}

ModeSpectrum build_spectrum(const ExperimentConfig& config) {
    switch (config.kind) {
        case SpectrumKind::Linear:
            return linear_spectrum(config.set_size, config.omega0);
        case SpectrumKind::Quadratic:
            return quadratic_spectrum(config.set_size, config.omega0);
        case SpectrumKind::Custom:
            if (config.custom_indices.empty()) {
                throw ConfigError("config: key 'indices': required for spectrum = custom");
            }
            return custom_spectrum(config.custom_indices, config.omega0);
    }
    throw ConfigError("config: unknown spectrum kind");
}

Eigen::Index resolve_searched(const ExperimentConfig& config, const ModeSpectrum& spectrum) {
    if (config.searched_position) {
        const Eigen::Index pos = *config.searched_position;
        if (pos < 0 || pos >= spectrum.size()) {
            throw ConfigError("config: key 'searched_position': out of range");
        }
        return pos;
    }
    if (config.searched_frequency) {
        const Eigen::Index pos = spectrum.position_of_frequency(*config.searched_frequency);
        if (pos < 0) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", *config.searched_frequency);
            throw ConfigError(std::string("config: key 'searched_frequency': no mode with "
                                          "frequency ") + buf);
        }
        return pos;
    }
    return spectrum.size() / 2;
}

SearchProblem resolve_problem(const ExperimentConfig& config) {
    ModeSpectrum spectrum = build_spectrum(config);
    const Index64 initial =
        config.initial_index ? *config.initial_index : default_initial_index(spectrum);
    const Eigen::Index searched = resolve_searched(config, spectrum);
    return make_problem(std::move(spectrum), initial, searched);
}

IntegratorConfig resolve_integrator(const ExperimentConfig& config,
                                    const SearchProblem& problem) {
    IntegratorConfig icfg;
    icfg.samples_per_fastest_period = config.samples_per_fastest_period;
    icfg.t_max = config.t_max_tau * optimal_time(problem);
    icfg.record_stride = config.record_stride;
    icfg.max_steps = config.max_steps;
    icfg.record_modes = config.verbose_modes;
    return icfg;
}

const char* run_mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::Simulate: return "simulate";
        case RunMode::CompareRwa: return "compare-rwa";
        case RunMode::Scan: return "scan";
        case RunMode::SpectrumStats: return "spectrum-stats";
        case RunMode::FieldSnapshot: return "field-snapshot";
    }
    return "unknown";
}

const char* spectrum_kind_name(SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::Linear: return "linear";
        case SpectrumKind::Quadratic: return "quadratic";
        case SpectrumKind::Custom: return "custom";
    }
    return "unknown";
}

}  // namespace wavesearch
