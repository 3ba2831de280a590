// trajectory.hpp — recorded time series of squared mode amplitudes
#pragma once

#include "wavesearch/types.hpp"

#include <string>

namespace wavesearch {

// Time series of P_n(t) = |a_n(t)|² produced either by the full integrator
// or by the analytic two-level model. The summary columns (initial mode,
// searched mode, norm, spectator max) are always present; the full per-mode
// matrix is kept only when requested, so long runs stay small.
struct Trajectory {
    std::string model = "full";       // model tag: "full" or "rwa"
    double tau = 0.0;                 // characteristic time π√N/ω₀
    double dt = 0.0;                  // integrator step (0 for analytic models)
    Eigen::Index mode_count = 0;      // N + 1
    Eigen::Index searched_position = -1;

    Eigen::VectorXd times;            // strictly increasing, starts at 0
    Eigen::VectorXd p_initial;        // P_j(t)
    Eigen::VectorXd p_searched;       // P_s(t)
    Eigen::VectorXd norm;             // Σ_n P_n(t)
    Eigen::VectorXd p_spectator_max;  // max over n ∉ {j, s} of P_n(t)

    // Optional per-mode series: rows follow `times`, columns follow the
    // problem's mode order (spectrum order, j last). Empty unless recorded.
    Eigen::MatrixXd modes;

    Eigen::Index sample_count() const { return times.size(); }
    bool has_modes() const { return modes.rows() == times.size() && modes.size() > 0; }
    double final_time() const { return times.size() > 0 ? times(times.size() - 1) : 0.0; }
};

}  // namespace wavesearch
