// rwa.hpp — closed-form rotating-wave (two-level) model
#pragma once

#include "wavesearch/spectrum.hpp"
#include "wavesearch/trajectory.hpp"
#include "wavesearch/types.hpp"

#include <utility>

namespace wavesearch {

// Slow exchange frequency Ω = ω₀/(2√N).
double rabi_frequency(const SearchProblem& problem);

// Optimal measurement time τ = π/(2Ω) = π√N/ω₀.
double optimal_time(const SearchProblem& problem);

// Two-level reduction of the coupled system: only j and s carry amplitude,
//   a_j(t) = cos(Ωt),  a_s(t) = i·sin(Ωt).
struct RwaModel {
    double rabi = 0.0;          // Ω
    double tau = 0.0;           // τ = π/(2Ω)
    double base_frequency = 1.0;
    Eigen::Index set_size = 0;  // N
    Index64 initial_index = 0;  // j
    Eigen::Index searched_position = -1;
};

RwaModel build_rwa(const SearchProblem& problem);

// (a_j, a_s) at time t; every other mode is identically zero in this model.
std::pair<Complex, Complex> analytic_amplitudes(const RwaModel& model, double t);

// min over spectrum ∪ {j} of ω_n / Ω; the approximation needs this ≫ 1.
double validity_ratio(const SearchProblem& problem);

// The model sampled on a uniform grid [0, t_max] as a Trajectory, so analysis
// code can treat the prediction and the full dynamics interchangeably.
Trajectory sample_trajectory(const RwaModel& model, double t_max, Eigen::Index samples);
Trajectory sample_trajectory(const RwaModel& model, const Eigen::VectorXd& times);

}  // namespace wavesearch
