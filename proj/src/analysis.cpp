#include "wavesearch/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

namespace wavesearch {

namespace {

constexpr double kPeakWindowFactor = 1.2;  // find_peak needs [0, 1.2τ]

struct Extremum {
    double t;
    double value;
    bool is_max;
};

}  // namespace

PeakReport find_peak(const Trajectory& trajectory) {
    const Eigen::Index m = trajectory.sample_count();
    if (m < 3) throw WindowError("find_peak: trajectory too short");
    if (!(trajectory.tau > 0.0)) throw WindowError("find_peak: trajectory lacks a τ scale");
    const double slack = std::max(trajectory.dt, 1e-9 * trajectory.tau);
    if (trajectory.final_time() + slack < kPeakWindowFactor * trajectory.tau) {
        throw WindowError("find_peak: trajectory must cover [0, 1.2τ]");
    }

    Eigen::Index imax = 0;
    trajectory.p_searched.maxCoeff(&imax);
    const double discrete_t = trajectory.times(imax);
    const double discrete_p = trajectory.p_searched(imax);

    PeakReport report{discrete_t, discrete_p, discrete_t / trajectory.tau};
    if (imax == 0 || imax == m - 1) return report;

    // parabola through the three bracketing samples (Newton form handles the
    // possibly shorter final interval)
    const double x0 = trajectory.times(imax - 1);
    const double x1 = trajectory.times(imax);
    const double x2 = trajectory.times(imax + 1);
    const double y0 = trajectory.p_searched(imax - 1);
    const double y1 = trajectory.p_searched(imax);
    const double y2 = trajectory.p_searched(imax + 1);
    const double d1 = (y1 - y0) / (x1 - x0);
    const double d2 = (y2 - y1) / (x2 - x1);
    const double curvature = (d2 - d1) / (x2 - x0);
    if (curvature < 0.0) {
        double t_star = 0.5 * (x0 + x1) - 0.5 * d1 / curvature;
        t_star = std::clamp(t_star, x0, x2);
        const double p_star =
            y0 + d1 * (t_star - x0) + curvature * (t_star - x0) * (t_star - x1);
        if (p_star >= y1) {
            report.t_star = t_star;
            report.p_star = p_star;
            report.t_star_over_tau = t_star / trajectory.tau;
        }
    }
    return report;
}

namespace {

ScalingRow run_one_size(SpectrumKind kind, Eigen::Index set_size, const ScanConfig& config) {
    ModeSpectrum spectrum = kind == SpectrumKind::Linear
                                ? linear_spectrum(set_size, config.omega0)
                                : quadratic_spectrum(set_size, config.omega0);
    const Index64 initial = default_initial_index(spectrum);
    SearchProblem problem = make_problem(std::move(spectrum), initial, set_size / 2);
    const double tau = optimal_time(problem);
    ScalingRow row;
    row.set_size = set_size;
    row.tau = tau;
    if (config.source == TrajectorySource::RwaModel) {
        row.t_star = tau;
        row.p_star = 1.0;
        row.t_star_over_tau = 1.0;
        return row;
    }
    IntegratorConfig icfg;
    icfg.samples_per_fastest_period = config.samples_per_fastest_period;
    icfg.t_max = config.t_max_tau * tau;
    icfg.record_stride = config.record_stride;
    icfg.max_steps = config.max_steps;
    const Trajectory trajectory = integrate(problem, icfg, default_initial(problem));
    const PeakReport peak = find_peak(trajectory);
    row.t_star = peak.t_star;
    row.p_star = peak.p_star;
    row.t_star_over_tau = peak.t_star_over_tau;
    return row;
}

}  // namespace

ScalingReport scaling_study(SpectrumKind kind, const std::vector<Eigen::Index>& sizes,
                            const ScanConfig& config) {
    if (kind == SpectrumKind::Custom) {
        throw ConfigError("scaling_study: scan needs the linear or quadratic index law");
    }
    if (sizes.empty()) throw ConfigError("scaling_study: empty size list");
    if (config.t_max_tau < kPeakWindowFactor) {
        throw ConfigError("scaling_study: t_max_tau must be >= 1.2 for peak detection");
    }
    std::vector<Eigen::Index> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const std::size_t count = sorted.size();
    std::vector<ScalingRow> rows(count);
    std::vector<std::exception_ptr> failures(count);
    const int workers = std::max(1, std::min<int>(config.workers, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                rows[i] = run_one_size(kind, sorted[i], config);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    rows[i] = run_one_size(kind, sorted[i], config);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (!failures[i]) continue;
        const std::string tag = "scaling_study: N=" + std::to_string(sorted[i]) + ": ";
        try {
            std::rethrow_exception(failures[i]);
        } catch (const NonFiniteError& e) {
            throw NonFiniteError(tag + e.what());
        } catch (const StepCapExceeded& e) {
            throw StepCapExceeded(tag + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError(tag + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error(tag + e.what());
        }
    }

    ScalingReport report;
    report.rows.assign(rows.begin(), rows.end());
    if (count >= 3) {
        double sxy = 0.0, sxx = 0.0, sx = 0.0, sy = 0.0, syy = 0.0;
        for (const ScalingRow& row : report.rows) {
            const double x = std::sqrt(static_cast<double>(row.set_size));
            sxy += x * row.t_star;
            sxx += x * x;
            sx += x;
            sy += row.t_star;
            syy += row.t_star * row.t_star;
        }
        const auto n = static_cast<double>(count);
        report.has_fit = true;
        report.alpha = sxy / sxx;
        report.alpha_omega0_over_pi = report.alpha * config.omega0 / kPi;
        const double cov = sxy - sx * sy / n;
        const double vx = sxx - sx * sx / n;
        const double vy = syy - sy * sy / n;
        report.correlation = (vx > 0.0 && vy > 0.0) ? cov / std::sqrt(vx * vy) : 0.0;
    }
    return report;
}

double rwa_deviation(const Trajectory& full, const RwaModel& model, double t_limit) {
    if (full.sample_count() == 0) throw WindowError("rwa_deviation: empty trajectory");
    double dev = -1.0;
    for (Eigen::Index i = 0; i < full.sample_count(); ++i) {
        const double t = full.times(i);
        if (t > t_limit) break;
        const double s = std::sin(model.rabi * t);
        dev = std::max(dev, std::abs(full.p_searched(i) - s * s));
    }
    if (dev < 0.0) throw WindowError("rwa_deviation: no recorded times within the window");
    return dev;
}

RippleMetric late_oscillation_metric(const Trajectory& trajectory, double t_lo, double t_hi) {
    const Eigen::Index m = trajectory.sample_count();
    if (m == 0 || !(t_hi > t_lo)) throw WindowError("late_oscillation_metric: bad window");
    const double slack = std::max(trajectory.dt, 1e-9 * std::abs(t_hi));
    if (trajectory.times(0) > t_lo + slack || trajectory.final_time() + slack < t_hi) {
        throw WindowError("late_oscillation_metric: trajectory does not cover the window");
    }

    // compress the in-window P_j series into runs of equal values; plateaus
    // then take their leftmost sample by construction
    std::vector<double> run_value;
    std::vector<double> run_time;
    for (Eigen::Index i = 0; i < m; ++i) {
        const double t = trajectory.times(i);
        if (t < t_lo || t > t_hi) continue;
        const double value = trajectory.p_initial(i);
        if (!run_value.empty() && value == run_value.back()) continue;
        run_value.push_back(value);
        run_time.push_back(t);
    }

    RippleMetric metric;
    if (run_value.size() < 3) return metric;
    std::vector<Extremum> extrema;
    for (std::size_t r = 1; r + 1 < run_value.size(); ++r) {
        const bool is_max = run_value[r] > run_value[r - 1] && run_value[r] > run_value[r + 1];
        const bool is_min = run_value[r] < run_value[r - 1] && run_value[r] < run_value[r + 1];
        if (is_max || is_min) extrema.push_back({run_time[r], run_value[r], is_max});
    }
    for (std::size_t k = 0; k + 1 < extrema.size(); ++k) {
        metric.amplitude =
            std::max(metric.amplitude, std::abs(extrema[k].value - extrema[k + 1].value));
    }
    double spacing_sum = 0.0;
    Eigen::Index spacing_count = 0;
    double last_max_t = std::numeric_limits<double>::quiet_NaN();
    for (const Extremum& e : extrema) {
        if (!e.is_max) continue;
        ++metric.maxima_count;
        if (!std::isnan(last_max_t)) {
            spacing_sum += e.t - last_max_t;
            ++spacing_count;
        }
        last_max_t = e.t;
    }
    if (spacing_count > 0) metric.period = spacing_sum / static_cast<double>(spacing_count);
    return metric;
}

RippleMetric late_oscillation_metric(const Trajectory& trajectory) {
    if (!(trajectory.tau > 0.0)) {
        throw WindowError("late_oscillation_metric: trajectory lacks a τ scale");
    }
    return late_oscillation_metric(trajectory, 1.5 * trajectory.tau, 2.5 * trajectory.tau);
}

}  // namespace wavesearch
