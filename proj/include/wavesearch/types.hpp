// types.hpp — shared scalar/vector aliases and error types
#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wavesearch {

using Complex = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using ArrayXc = Eigen::ArrayXcd;
using ArrayXd = Eigen::ArrayXd;
using Index64 = std::int64_t;
using IndexList = Eigen::Array<Index64, Eigen::Dynamic, 1>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Thrown when a spectrum / problem / experiment description is invalid.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An amplitude became NaN/Inf during integration (dt too large).
struct NonFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// t_max / dt exceeds the configured hard cap on total steps.
struct StepCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An analysis window does not cover the requested time range.
struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures while writing artifacts.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wavesearch
