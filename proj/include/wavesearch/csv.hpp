// csv.hpp — deterministic CSV artifacts (12 significant digits, fixed column
// order, config echoed in a leading comment block, no timestamps)
#pragma once

#include "wavesearch/analysis.hpp"
#include "wavesearch/field.hpp"
#include "wavesearch/spectrum.hpp"
#include "wavesearch/trajectory.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wavesearch {

using HeaderBlock = std::vector<std::pair<std::string, std::string>>;

// "%.12g" rendering used for every floating-point cell.
std::string format_value(double x);

// header comments, then t, t/τ, P_j, P_s, Σ_n P_n, max spectator P_n; per-mode
// columns when the trajectory recorded them and mode_indices is given; a model
// tag column for analytic-model trajectories.
void write_trajectory_csv(const std::string& path, const Trajectory& trajectory,
                          const HeaderBlock& header,
                          const IndexList* mode_indices = nullptr);

// side-by-side full dynamics vs analytic model at the full run's times
void write_compare_csv(const std::string& path, const Trajectory& full,
                       const RwaModel& model, const HeaderBlock& header);

void write_scaling_csv(const std::string& path, const ScalingReport& report,
                       const HeaderBlock& header);

void write_histogram_csv(const std::string& path,
                         const std::map<Index64, Index64>& histogram, double omega0,
                         const HeaderBlock& header);

// x, Re Ψ, Im Ψ, |Ψ|²
void write_field_csv(const std::string& path, const WaveField& field,
                     const HeaderBlock& header);

}  // namespace wavesearch
