#include "wavesearch/field.hpp"

#include <cmath>

namespace wavesearch {

namespace {

void check_consistent(const IndexList& indices, Eigen::Index coeff_count,
                      const FieldGeometry& geometry) {
    if (indices.size() != coeff_count) {
        throw ConfigError("field: coefficient list not aligned with the mode indices");
    }
    if (indices.size() == 0) {
        throw ConfigError("field: empty mode list");
    }
    if (indices.minCoeff() < 1) {
        throw ConfigError("field: mode indices must be positive");
    }
    if (geometry.intervals < 4 * indices.maxCoeff()) {
        throw ConfigError("field: grid too coarse, need intervals >= 4*max index");
    }
}

// sin/cos of K_n·x_i = 2π·(n·i mod M)/M. Reducing the integer product first
// keeps basis values exact at the periodic points (exactly 0 at x=0, x=L).
double basis_angle(Index64 mode_index, Eigen::Index grid_index, Eigen::Index intervals) {
    const Index64 r = (mode_index * static_cast<Index64>(grid_index)) % intervals;
    return kTwoPi * static_cast<double>(r) / static_cast<double>(intervals);
}

enum class Basis { Sine, Cosine };

WaveField synthesize(const VectorXc& coeffs, double t, const IndexList& indices,
                     const FieldGeometry& geometry, Basis basis) {
    check_consistent(indices, coeffs.size(), geometry);
    const Eigen::Index points = geometry.point_count();
    WaveField field;
    field.geometry = geometry;
    field.grid = Eigen::VectorXd::LinSpaced(points, 0.0, geometry.length);
    field.values = VectorXc::Zero(points);
    const double omega0 = geometry.base_frequency();
    for (Eigen::Index k = 0; k < indices.size(); ++k) {
        const double omega_n = omega0 * static_cast<double>(indices(k));
        const Complex rotated = coeffs(k) * std::polar(1.0, -omega_n * t);
        if (rotated == Complex(0.0, 0.0)) continue;
        for (Eigen::Index i = 0; i < points; ++i) {
            const double angle = basis_angle(indices(k), i, geometry.intervals);
            const double b = basis == Basis::Sine ? std::sin(angle) : std::cos(angle);
            field.values(i) += rotated * b;
        }
    }
    return field;
}

}  // namespace

FieldGeometry default_geometry(Index64 max_index) {
    if (max_index < 1) throw ConfigError("field: max index must be positive");
    FieldGeometry g;
    g.intervals = static_cast<Eigen::Index>(4 * max_index);
    return g;
}

WaveField reconstruct(const VectorXc& coeffs, double t, const IndexList& indices,
                      const FieldGeometry& geometry) {
    return synthesize(coeffs, t, indices, geometry, Basis::Sine);
}

WaveField reconstruct(const VectorXc& coeffs, double t, const ModeSpectrum& spectrum,
                      const FieldGeometry& geometry) {
    return reconstruct(coeffs, t, spectrum.indices, geometry);
}

WaveField apply_T(const VectorXc& coeffs, double t, const IndexList& indices,
                  const FieldGeometry& geometry) {
    return synthesize(coeffs, t, indices, geometry, Basis::Cosine);
}

WaveField apply_T(const VectorXc& coeffs, double t, const ModeSpectrum& spectrum,
                  const FieldGeometry& geometry) {
    return apply_T(coeffs, t, spectrum.indices, geometry);
}

VectorXc extract_coefficients(const WaveField& field, double t, const IndexList& indices) {
    if (field.values.size() != field.geometry.point_count()) {
        throw ConfigError("field: sample count does not match the geometry grid");
    }
    check_consistent(indices, indices.size(), field.geometry);

    const Eigen::Index m = field.geometry.intervals;
    const double h = field.geometry.length / static_cast<double>(m);
    const double omega0 = field.geometry.base_frequency();
    VectorXc coeffs(indices.size());
    for (Eigen::Index k = 0; k < indices.size(); ++k) {
        // trapezoid: the sin factor vanishes at both ends, so the half
        // weights contribute nothing
        Complex acc(0.0, 0.0);
        for (Eigen::Index i = 1; i < m; ++i) {
            acc += field.values(i) * std::sin(basis_angle(indices(k), i, m));
        }
        const double omega_n = omega0 * static_cast<double>(indices(k));
        coeffs(k) = std::polar(1.0, omega_n * t) * (2.0 / field.geometry.length) * h * acc;
    }
    return coeffs;
}

VectorXc extract_coefficients(const WaveField& field, double t, const ModeSpectrum& spectrum) {
    return extract_coefficients(field, t, spectrum.indices);
}

double grid_norm(const WaveField& field) {
    const Eigen::Index points = field.values.size();
    if (points < 2) return 0.0;
    const double h = field.geometry.length / static_cast<double>(field.geometry.intervals);
    double acc = 0.5 * (std::norm(field.values(0)) + std::norm(field.values(points - 1)));
    for (Eigen::Index i = 1; i < points - 1; ++i) acc += std::norm(field.values(i));
    return std::sqrt(h * acc);
}

}  // namespace wavesearch
