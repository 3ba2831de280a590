#include "wavesearch/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace wavesearch {

namespace {

ModeSpectrum finish(IndexList indices, double omega0, SpectrumKind kind) {
    if (omega0 <= 0.0 || !std::isfinite(omega0)) {
        throw ConfigError("spectrum: base frequency must be positive and finite");
    }
    if (indices.size() < 2) {
        throw ConfigError("spectrum: need at least 2 modes, no search possible otherwise");
    }
    for (Eigen::Index i = 0; i < indices.size(); ++i) {
        if (indices(i) < 1) {
            throw ConfigError("spectrum: indices must be strictly positive");
        }
        if (i > 0 && indices(i) <= indices(i - 1)) {
            throw ConfigError("spectrum: indices must be strictly increasing (nondegenerate)");
        }
    }
    ModeSpectrum s;
    s.base_frequency = omega0;
    s.indices = std::move(indices);
    s.frequencies = omega0 * s.indices.cast<double>();
    s.kind = kind;
    return s;
}

}  // namespace

bool ModeSpectrum::contains_index(Index64 n) const {
    const auto* begin = indices.data();
    const auto* end = begin + indices.size();
    return std::binary_search(begin, end, n);
}

Eigen::Index ModeSpectrum::position_of_frequency(double omega) const {
    const auto n = static_cast<Index64>(std::llround(omega / base_frequency));
    if (n < 1 || base_frequency * static_cast<double>(n) != omega) return -1;
    const auto* begin = indices.data();
    const auto* end = begin + indices.size();
    const auto* it = std::lower_bound(begin, end, n);
    if (it == end || *it != n) return -1;
    return static_cast<Eigen::Index>(it - begin);
}

ModeSpectrum linear_spectrum(Eigen::Index set_size, double omega0) {
    if (set_size < 2) throw ConfigError("linear_spectrum: N must be >= 2");
    IndexList idx(set_size);
    for (Eigen::Index i = 0; i < set_size; ++i) idx(i) = i + 1;
    return finish(std::move(idx), omega0, SpectrumKind::Linear);
}

ModeSpectrum quadratic_spectrum(Eigen::Index set_size, double omega0) {
    if (set_size < 2) throw ConfigError("quadratic_spectrum: N must be >= 2");
    IndexList idx(set_size);
    for (Eigen::Index i = 0; i < set_size; ++i) idx(i) = (i + 1) * (i + 1);
    return finish(std::move(idx), omega0, SpectrumKind::Quadratic);
}

ModeSpectrum custom_spectrum(std::vector<Index64> indices, double omega0) {
    IndexList idx(static_cast<Eigen::Index>(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i) idx(static_cast<Eigen::Index>(i)) = indices[i];
    return finish(std::move(idx), omega0, SpectrumKind::Custom);
}

Index64 default_initial_index(const ModeSpectrum& spectrum) {
    switch (spectrum.kind) {
        case SpectrumKind::Linear:
            return spectrum.size() + 1;
        case SpectrumKind::Quadratic: {
            const Index64 root = spectrum.size() + 1;
            return root * root;
        }
        case SpectrumKind::Custom:
            return spectrum.max_index() + 1;
    }
    return spectrum.max_index() + 1;
}

double SearchProblem::max_frequency() const {
    const Index64 top = std::max(spectrum.max_index(), initial_index);
    return spectrum.base_frequency * static_cast<double>(top);
}

SearchProblem make_problem(ModeSpectrum spectrum, Index64 initial_index,
                           Eigen::Index searched_position) {
    if (initial_index < 1) {
        throw ConfigError("make_problem: initial index j must be a positive integer");
    }
    if (spectrum.contains_index(initial_index)) {
        throw ConfigError("make_problem: initial mode j collides with the search set");
    }
    if (searched_position < 0 || searched_position >= spectrum.size()) {
        throw ConfigError("make_problem: searched position out of range");
    }
    SearchProblem p;
    p.spectrum = std::move(spectrum);
    p.initial_index = initial_index;
    p.searched_position = searched_position;
    if (p.drive_frequency() == 0.0) {
        throw ConfigError("make_problem: drive frequency omega_sj must be nonzero");
    }
    return p;
}

std::map<Index64, Index64> degeneracy_histogram(const IndexList& indices) {
    std::map<Index64, Index64> hist;
    const Eigen::Index m = indices.size();
    for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < m; ++b) {
            if (a == b) continue;
            ++hist[indices(b) - indices(a)];
        }
    }
    return hist;
}

std::map<Index64, Index64> degeneracy_histogram(const SearchProblem& problem) {
    return degeneracy_histogram(joint_indices(problem));
}

IndexList joint_indices(const SearchProblem& problem) {
    const Eigen::Index n = problem.spectrum.size();
    IndexList joint(n + 1);
    joint.head(n) = problem.spectrum.indices;
    joint(n) = problem.initial_index;
    return joint;
}

}  // namespace wavesearch
