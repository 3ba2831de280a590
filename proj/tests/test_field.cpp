#include "wavesearch/field.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wavesearch;

namespace {

VectorXc random_coeffs(std::mt19937_64& gen, Eigen::Index size) {
    auto u = [&gen] { return 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0; };
    VectorXc out(size);
    for (Eigen::Index i = 0; i < size; ++i) out(i) = Complex(u(), u());
    return out;
}

}  // namespace

TEST_CASE("default geometry matches the dimensionless presentation") {
    const FieldGeometry g = default_geometry(10);
    CHECK(g.length == kTwoPi);
    CHECK(g.wave_speed == 1.0);
    CHECK(g.base_frequency() == 1.0);
    CHECK(g.intervals == 40);
    CHECK(g.point_count() == 41);
}

TEST_CASE("a single unit mode reconstructs to its sine") {
    const ModeSpectrum s = linear_spectrum(3, 1.0);
    const FieldGeometry g = default_geometry(3);
    VectorXc coeffs = VectorXc::Zero(3);
    coeffs(0) = Complex(1.0, 0.0);
    const WaveField f = reconstruct(coeffs, 0.0, s, g);
    for (Eigen::Index i = 0; i < f.grid.size(); ++i) {
        const double expected = std::sin(kTwoPi * f.grid(i) / g.length);
        CHECK(f.values(i).real() == doctest::Approx(expected).epsilon(1e-12));
        CHECK(f.values(i).imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("boundary values vanish identically") {
        CHECK(f.values(0) == Complex(0.0, 0.0));
        CHECK(f.values(f.values.size() - 1) == Complex(0.0, 0.0));
    }
}

TEST_CASE("zero coefficients give the zero field") {
    const ModeSpectrum s = linear_spectrum(5, 1.0);
    const WaveField f = reconstruct(VectorXc::Zero(5), 1.7, s, default_geometry(5));
    CHECK(f.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("the field is periodic in the mode period") {
    const ModeSpectrum s = linear_spectrum(4, 1.0);
    const FieldGeometry g = default_geometry(4);
    VectorXc coeffs = VectorXc::Zero(4);
    coeffs(0) = Complex(1.0, 0.0);
    const WaveField f0 = reconstruct(coeffs, 0.0, s, g);
    const WaveField f1 = reconstruct(coeffs, kTwoPi / s.frequencies(0), s, g);
    CHECK((f1.values - f0.values).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("reconstructed fields vanish at both ends for any coefficients") {
    std::mt19937_64 gen(5);
    const ModeSpectrum s = quadratic_spectrum(5, 1.0);
    const FieldGeometry g = default_geometry(25);
    for (int trial = 0; trial < 10; ++trial) {
        const WaveField f = reconstruct(random_coeffs(gen, 5), 0.9 * trial, s, g);
        CHECK(std::abs(f.values(0)) == 0.0);
        CHECK(std::abs(f.values(f.values.size() - 1)) == 0.0);
    }
}

TEST_CASE("extract after reconstruct is the identity") {
    std::mt19937_64 gen(11);
    const ModeSpectrum s = linear_spectrum(10, 1.0);
    const FieldGeometry g = default_geometry(10);
    for (int trial = 0; trial < 100; ++trial) {
        const VectorXc coeffs = random_coeffs(gen, 10);
        const double t = 20.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
        const WaveField f = reconstruct(coeffs, t, s, g);
        const VectorXc back = extract_coefficients(f, t, s);
        CHECK((back - coeffs).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("projection is orthogonal across modes") {
    const ModeSpectrum s = linear_spectrum(6, 1.0);
    const FieldGeometry g = default_geometry(6);
    for (Eigen::Index n = 0; n < 6; ++n) {
        VectorXc coeffs = VectorXc::Zero(6);
        coeffs(n) = Complex(1.0, 0.0);
        const WaveField f = reconstruct(coeffs, 0.0, s, g);
        const VectorXc back = extract_coefficients(f, 0.0, s);
        for (Eigen::Index k = 0; k < 6; ++k) {
            if (k == n) {
                // the 2/L normalization cancels the L/2 mode norm exactly
                CHECK(back(k).real() == doctest::Approx(1.0).epsilon(1e-12));
            } else {
                CHECK(std::abs(back(k)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("grid quadrature reproduces (L/2)δ_nm") {
    const Eigen::Index n_max = 8;
    const FieldGeometry g = default_geometry(n_max);
    const double h = g.length / static_cast<double>(g.intervals);
    for (Index64 n = 1; n <= n_max; ++n) {
        for (Index64 m = 1; m <= n_max; ++m) {
            double acc = 0.0;
            for (Eigen::Index i = 0; i < g.intervals; ++i) {
                const double x = g.length * static_cast<double>(i) /
                                 static_cast<double>(g.intervals);
                acc += std::sin(g.wavenumber_unit() * static_cast<double>(n) * x) *
                       std::sin(g.wavenumber_unit() * static_cast<double>(m) * x);
            }
            const double expected = n == m ? 0.5 * g.length : 0.0;
            CHECK(std::abs(h * acc - expected) <= 1e-12);
        }
    }
}

TEST_CASE("T swaps the basis and keeps coefficients and norm") {
    const ModeSpectrum s = linear_spectrum(3, 1.0);
    const FieldGeometry g = default_geometry(3);
    SUBCASE("single mode becomes its cosine") {
        VectorXc coeffs = VectorXc::Zero(3);
        coeffs(0) = Complex(1.0, 0.0);
        const WaveField f = apply_T(coeffs, 0.0, s, g);
        for (Eigen::Index i = 0; i < f.grid.size(); ++i) {
            const double expected = std::cos(kTwoPi * f.grid(i) / g.length);
            CHECK(f.values(i).real() == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("the swap is an isometry on resolved modes") {
        std::mt19937_64 gen(3);
        for (int trial = 0; trial < 10; ++trial) {
            const VectorXc coeffs = random_coeffs(gen, 3);
            const double t = 1.3 * trial;
            const WaveField sine = reconstruct(coeffs, t, s, g);
            const WaveField cosine = apply_T(coeffs, t, s, g);
            CHECK(grid_norm(cosine) == doctest::Approx(grid_norm(sine)).epsilon(1e-12));
        }
    }
    SUBCASE("T is not an involution: the cosine field differs from the sine field") {
        VectorXc coeffs = VectorXc::Zero(3);
        coeffs(0) = Complex(1.0, 0.0);
        const WaveField sine = reconstruct(coeffs, 0.0, s, g);
        const WaveField cosine = apply_T(coeffs, 0.0, s, g);
        CHECK((sine.values - cosine.values).cwiseAbs().maxCoeff() > 0.5);
    }
}

TEST_CASE("a too-coarse grid is rejected") {
    const ModeSpectrum s = linear_spectrum(10, 1.0);
    FieldGeometry g = default_geometry(10);
    g.intervals = 39;  // below 4·n_max
    CHECK_THROWS_AS(reconstruct(VectorXc::Ones(10), 0.0, s, g), ConfigError);
    CHECK_THROWS_AS(apply_T(VectorXc::Ones(10), 0.0, s, g), ConfigError);
    const WaveField ok = reconstruct(VectorXc::Ones(10), 0.0, s, default_geometry(10));
    WaveField shrunk = ok;
    shrunk.geometry.intervals = 39;
    shrunk.grid.conservativeResize(40);
    shrunk.values.conservativeResize(40);
    CHECK_THROWS_AS(extract_coefficients(shrunk, 0.0, s), ConfigError);
}

TEST_CASE("misaligned coefficients are rejected") {
    const ModeSpectrum s = linear_spectrum(4, 1.0);
    CHECK_THROWS_AS(reconstruct(VectorXc::Ones(3), 0.0, s, default_geometry(4)),
                    ConfigError);
}
