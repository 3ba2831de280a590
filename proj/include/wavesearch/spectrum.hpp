// spectrum.hpp — mode spectra (index law ω_n = ω₀·n) and search-problem setup
#pragma once

#include "wavesearch/types.hpp"

#include <map>
#include <vector>

namespace wavesearch {

enum class SpectrumKind { Linear, Quadratic, Custom };

// Ordered nondegenerate set of mode frequencies ω_n = ω₀·n for positive
// integer indices n. Frequencies are always stored as ω₀ × integer index so
// degeneracy questions reduce to exact integer comparisons.
struct ModeSpectrum {
    double base_frequency = 1.0;  // ω₀ > 0
    IndexList indices;            // strictly increasing, all ≥ 1
    ArrayXd frequencies;          // ω₀ · indices
    SpectrumKind kind = SpectrumKind::Custom;

    Eigen::Index size() const { return indices.size(); }
    Index64 max_index() const { return indices(indices.size() - 1); }
    bool contains_index(Index64 n) const;

    // Position of the mode whose frequency equals ω exactly under the index
    // law (robust reverse check: ω == fl(ω₀·n)); -1 if no such mode.
    Eigen::Index position_of_frequency(double omega) const;
};

ModeSpectrum linear_spectrum(Eigen::Index set_size, double omega0);
ModeSpectrum quadratic_spectrum(Eigen::Index set_size, double omega0);
ModeSpectrum custom_spectrum(std::vector<Index64> indices, double omega0);

// Default initial mode j: the next index of the spectrum's own law
// (N+1 linear, (N+1)² quadratic, max+1 custom). Always ∉ the search set.
Index64 default_initial_index(const ModeSpectrum& spectrum);

// Search configuration: spectrum = search set N, initial mode j outside it,
// searched mode s inside it. Sign convention: ω_ab ≡ ω_b − ω_a.
struct SearchProblem {
    ModeSpectrum spectrum;
    Index64 initial_index = 0;           // j
    Eigen::Index searched_position = 0;  // 0-based position of s in spectrum

    Index64 searched_index() const { return spectrum.indices(searched_position); }
    double omega_initial() const { return spectrum.base_frequency * static_cast<double>(initial_index); }
    double omega_searched() const { return spectrum.frequencies(searched_position); }
    // Drive frequency ω_sj = ω_j − ω_s
    double drive_frequency() const { return omega_initial() - omega_searched(); }
    Eigen::Index set_size() const { return spectrum.size(); }
    Eigen::Index mode_count() const { return spectrum.size() + 1; }  // spectrum ∪ {j}
    double max_frequency() const;
};

SearchProblem make_problem(ModeSpectrum spectrum, Index64 initial_index,
                           Eigen::Index searched_position);

// Transition-frequency degeneracy census over ordered pairs of distinct
// modes: key = index difference (frequency difference / ω₀, exact), value =
// number of ordered pairs sharing it.
std::map<Index64, Index64> degeneracy_histogram(const IndexList& indices);
std::map<Index64, Index64> degeneracy_histogram(const SearchProblem& problem);

// Spectrum ∪ {j} as one index list, spectrum order first, j last.
IndexList joint_indices(const SearchProblem& problem);

}  // namespace wavesearch
