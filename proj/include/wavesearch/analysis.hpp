// analysis.hpp — observables extracted from trajectories: peak location,
// √N scaling fits, RWA deviation, late-time ripple
#pragma once

#include "wavesearch/dynamics.hpp"
#include "wavesearch/rwa.hpp"
#include "wavesearch/trajectory.hpp"

#include <vector>

namespace wavesearch {

struct PeakReport {
    double t_star = 0.0;           // time of maximum P_s
    double p_star = 0.0;           // the maximum itself
    double t_star_over_tau = 0.0;
};

// Discrete argmax of P_s, refined by a parabola through the three samples
// bracketing the maximum. Requires the trajectory to reach 1.2τ.
PeakReport find_peak(const Trajectory& trajectory);

struct ScalingRow {
    Eigen::Index set_size = 0;  // N
    double t_star = 0.0;
    double tau = 0.0;
    double t_star_over_tau = 0.0;
    double p_star = 0.0;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;  // sorted by N
    bool has_fit = false;          // needs >= 3 rows
    double alpha = 0.0;            // least-squares slope of t_star = α·√N through the origin
    double alpha_omega0_over_pi = 0.0;  // → 1 when the √N law holds
    double correlation = 0.0;           // Pearson r of (√N, t_star)
};

enum class TrajectorySource { FullDynamics, RwaModel };

struct ScanConfig {
    double omega0 = 1.0;
    double t_max_tau = 1.3;  // needs >= 1.2 for find_peak
    int samples_per_fastest_period = 32;
    Eigen::Index record_stride = 0;
    std::int64_t max_steps = 100'000'000;
    int workers = 1;
    TrajectorySource source = TrajectorySource::FullDynamics;
};

// Runs one integration per N (default j and mid-spectrum s), collects peak
// reports, and fits the √N law. Per-N runs are independent and may be
// dispatched to parallel workers; rows are merged sorted by N either way.
// With source = RwaModel the rows come from the closed form (t* = τ, p* = 1).
ScalingReport scaling_study(SpectrumKind kind, const std::vector<Eigen::Index>& sizes,
                            const ScanConfig& config);

// sup over recorded times t ≤ t_limit of |P_s(t) − sin²(Ωt)|.
double rwa_deviation(const Trajectory& full, const RwaModel& model,
                     double t_limit = std::numeric_limits<double>::infinity());

struct RippleMetric {
    double amplitude = 0.0;  // largest |ΔP_j| between adjacent interior extrema
    double period = 0.0;     // mean spacing of successive interior local maxima; 0 if < 2
    Eigen::Index maxima_count = 0;
};

// Ripple of P_j inside [t_lo, t_hi]. Local extrema require strict inequality
// over a 3-sample neighborhood; plateaus take the leftmost sample. A smooth
// monotone or single-humped P_j has no adjacent extrema pair and reports
// amplitude 0.
RippleMetric late_oscillation_metric(const Trajectory& trajectory, double t_lo, double t_hi);

// Default window around 2τ: [1.5τ, 2.5τ].
RippleMetric late_oscillation_metric(const Trajectory& trajectory);

}  // namespace wavesearch
