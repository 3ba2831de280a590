// field.hpp — spatial reconstruction Ψ(x,t), projection quadrature, T operator
#pragma once

#include "wavesearch/spectrum.hpp"
#include "wavesearch/types.hpp"

namespace wavesearch {

// Geometry of the spatial domain: K₀ = 2π/L, ω₀ = c·K₀. The grid has
// `intervals` + 1 uniformly spaced points on [0, L]; the grid must satisfy
// intervals ≥ 4·n_max so products of two resolved modes are integrable by
// the trapezoid rule without aliasing.
struct FieldGeometry {
    double length = kTwoPi;   // L
    double wave_speed = 1.0;  // c
    Eigen::Index intervals = 0;

    double wavenumber_unit() const { return kTwoPi / length; }             // K₀
    double base_frequency() const { return wave_speed * wavenumber_unit(); }  // ω₀
    Eigen::Index point_count() const { return intervals + 1; }
};

// L = 2π, c = 1 (so ω₀ = 1), intervals = 4·max_index.
FieldGeometry default_geometry(Index64 max_index);

struct WaveField {
    FieldGeometry geometry;
    Eigen::VectorXd grid;  // M+1 points, x_i = L·i/M
    VectorXc values;       // Ψ(x_i, t)
};

// Ψ(x,t) = Σ_n a_n·e^{−iω_n t}·sin(K_n x) over the given index list,
// sampled on the geometry's grid.
WaveField reconstruct(const VectorXc& coeffs, double t, const IndexList& indices,
                      const FieldGeometry& geometry);
WaveField reconstruct(const VectorXc& coeffs, double t, const ModeSpectrum& spectrum,
                      const FieldGeometry& geometry);

// a_n(t) = e^{iω_n t}·(2/L)·∫₀ᴸ Ψ(x,t)·sin(K_n x) dx per mode, by the
// composite trapezoid rule on the uniform grid (exact for band-limited
// integrands the grid resolves).
VectorXc extract_coefficients(const WaveField& field, double t, const IndexList& indices);
VectorXc extract_coefficients(const WaveField& field, double t, const ModeSpectrum& spectrum);

// TΨ(x,t) = Σ_n a_n·e^{−iω_n t}·cos(K_n x): the sine basis swapped for
// cosine, coefficients untouched.
WaveField apply_T(const VectorXc& coeffs, double t, const IndexList& indices,
                  const FieldGeometry& geometry);
WaveField apply_T(const VectorXc& coeffs, double t, const ModeSpectrum& spectrum,
                  const FieldGeometry& geometry);

// Trapezoid-weighted grid norm sqrt(h·Σ'|Ψ_i|²) (half weights at the ends).
double grid_norm(const WaveField& field);

}  // namespace wavesearch
