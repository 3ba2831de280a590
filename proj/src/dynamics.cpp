#include "wavesearch/dynamics.hpp"

#include "wavesearch/rwa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace wavesearch {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559L;

// ω₀·t mod 2π with the product and reduction carried in extended precision.
// t may reach ~10⁸·dt, so a plain double product would cost ~1e-9 rad here
// and the per-mode integer multiples would amplify that by the index range.
double reduced_base_angle(double omega0, long double t) {
    return static_cast<double>(
        fmodl(static_cast<long double>(omega0) * t, kTwoPiL));
}

long double stage_time(double t0, std::int64_t step, double stage_frac, double dt) {
    return static_cast<long double>(t0) +
           (static_cast<long double>(step) + static_cast<long double>(stage_frac)) *
               static_cast<long double>(dt);
}

}  // namespace

double step_size(const SearchProblem& problem, const IntegratorConfig& config) {
    if (config.samples_per_fastest_period < 1) {
        throw ConfigError("integrate: samples_per_fastest_period must be >= 1");
    }
    return (kTwoPi / problem.max_frequency()) /
           static_cast<double>(config.samples_per_fastest_period);
}

CoupledModeSystem::CoupledModeSystem(const SearchProblem& problem, double drive_scale)
    : set_size_(problem.set_size()),
      omega0_(problem.spectrum.base_frequency),
      omega_max_(problem.max_frequency()),
      coupling_(drive_scale * problem.spectrum.base_frequency /
                std::sqrt(static_cast<double>(problem.set_size()))) {
    const Eigen::Index n = set_size_;
    const Index64 s_index = problem.searched_index();
    detune_index_ = (problem.spectrum.indices - s_index).cast<double>();
    ArrayXd omega(n + 1);
    omega.head(n) = problem.spectrum.frequencies;
    omega(n) = problem.omega_initial();
    two_i_omega_.resize(n + 1);
    two_i_omega_.real() = ArrayXd::Zero(n + 1);
    two_i_omega_.imag() = 2.0 * omega;
    drive_row_ = (coupling_ * problem.spectrum.frequencies).cast<Complex>();
    drive_j_ = coupling_ * problem.omega_initial();
    theta_.resize(n);
}

void CoupledModeSystem::fill_phases(double base_angle, ArrayXc& phase) const {
    theta_ = detune_index_ * base_angle;
    theta_ -= (theta_ * (1.0 / kTwoPi)).round() * kTwoPi;
    phase.real() = theta_.cos();
    phase.imag() = theta_.sin();
}

void CoupledModeSystem::phases_at(double t, ArrayXc& phase) const {
    fill_phases(reduced_base_angle(omega0_, static_cast<long double>(t)), phase);
}

void CoupledModeSystem::phases_at_step(double t0, std::int64_t step, double stage_frac,
                                       double dt, ArrayXc& phase) const {
    fill_phases(reduced_base_angle(omega0_, stage_time(t0, step, stage_frac, dt)), phase);
}

void CoupledModeSystem::acceleration(const ArrayXc& a, const ArrayXc& v,
                                     const ArrayXc& phase, ArrayXc& dv) const {
    const Eigen::Index n = set_size_;
    dv = two_i_omega_ * v;
    dv.head(n) -= a(n) * (drive_row_ * phase);
    dv(n) -= drive_j_ * (a.head(n) * phase.conjugate()).sum();
}

std::pair<ArrayXc, ArrayXc> rhs(const SearchProblem& problem, const AmplitudeState& state) {
    const Eigen::Index m = problem.mode_count();
    if (state.a.size() != m || state.v.size() != m) {
        throw ConfigError("rhs: state size does not match spectrum ∪ {j}");
    }
    const CoupledModeSystem system(problem);
    ArrayXc phase(problem.set_size());
    system.phases_at(state.t, phase);
    ArrayXc dv(m);
    system.acceleration(state.a, state.v, phase, dv);
    return {state.v, std::move(dv)};
}

VectorXc coupling_elements(const SearchProblem& problem, const AmplitudeState& state) {
    const Eigen::Index n = problem.set_size();
    if (state.a.size() != n + 1 || state.v.size() != n + 1) {
        throw ConfigError("coupling_elements: state size does not match spectrum ∪ {j}");
    }
    const double inv_root = 1.0 / std::sqrt(static_cast<double>(n));
    const double omega_sj = problem.drive_frequency();
    const Complex drive_phase =
        std::polar(1.0, reduced_base_angle(omega_sj, static_cast<long double>(state.t)));
    VectorXc elements(n + 1);
    elements.head(n).setConstant(inv_root * state.a(n) * drive_phase);
    Complex sum(0.0, 0.0);
    for (Eigen::Index l = 0; l < n; ++l) {
        const double angle = reduced_base_angle(problem.spectrum.frequencies(l),
                                                static_cast<long double>(state.t));
        sum += state.a(l) * std::polar(1.0, -angle);
    }
    elements(n) = inv_root * std::conj(drive_phase) * sum;
    return elements;
}

AmplitudeState default_initial(const SearchProblem& problem) {
    AmplitudeState s;
    const Eigen::Index m = problem.mode_count();
    s.t = 0.0;
    s.a = ArrayXc::Zero(m);
    s.v = ArrayXc::Zero(m);
    s.a(m - 1) = Complex(1.0, 0.0);
    return s;
}

AmplitudeState randomized_initial(const SearchProblem& problem, double band,
                                  std::uint64_t seed) {
    if (band < 0.0 || !std::isfinite(band)) {
        throw ConfigError("randomized_initial: band must be finite and >= 0");
    }
    AmplitudeState s = default_initial(problem);
    std::mt19937_64 gen(seed);
    auto uniform = [&gen, band]() {
        // top 53 bits → [0,1); implementation-independent mapping
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return band * (2.0 * u - 1.0);
    };
    for (Eigen::Index i = 0; i < s.v.size(); ++i) {
        const double re = uniform();
        const double im = uniform();
        s.v(i) = Complex(re, im);
    }
    return s;
}

Trajectory integrate(const SearchProblem& problem, const IntegratorConfig& config,
                     const AmplitudeState& initial, AmplitudeState* final_state) {
    const Eigen::Index m = problem.mode_count();
    const Eigen::Index n = problem.set_size();
    if (initial.a.size() != m || initial.v.size() != m) {
        throw ConfigError("integrate: initial state size does not match spectrum ∪ {j}");
    }
    if (!initial.finite()) {
        throw ConfigError("integrate: initial state has non-finite entries");
    }
    if (config.t_max < 0.0 || !std::isfinite(config.t_max)) {
        throw ConfigError("integrate: t_max must be finite and >= 0");
    }

    const double dt = step_size(problem, config);
    const double raw_steps = config.t_max / dt;
    const double snapped = std::round(raw_steps);
    const bool near_integer =
        std::abs(raw_steps - snapped) <=
        32.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, raw_steps);
    const auto steps =
        static_cast<std::int64_t>(near_integer ? snapped : std::ceil(raw_steps));
    if (steps > config.max_steps) {
        throw StepCapExceeded("integrate: " + std::to_string(steps) +
                              " steps exceed the cap of " +
                              std::to_string(config.max_steps));
    }
    const Eigen::Index stride =
        config.record_stride > 0
            ? config.record_stride
            : std::max<Eigen::Index>(1, static_cast<Eigen::Index>(steps / 2000));

    const CoupledModeSystem system(problem, config.drive_scale);
    const double t0 = initial.t;

    Trajectory out;
    out.model = "full";
    out.tau = optimal_time(problem);
    out.dt = dt;
    out.mode_count = m;
    out.searched_position = problem.searched_position;
    const Eigen::Index max_records =
        2 + static_cast<Eigen::Index>(steps / stride) + 1;
    out.times.resize(max_records);
    out.p_initial.resize(max_records);
    out.p_searched.resize(max_records);
    out.norm.resize(max_records);
    out.p_spectator_max.resize(max_records);
    if (config.record_modes) out.modes.resize(max_records, m);

    ArrayXc a = initial.a;
    ArrayXc v = initial.v;
    ArrayXc a2(m), v2(m), a3(m), v3(m), a4(m), v4(m);
    ArrayXc dv1(m), dv2(m), dv3(m), dv4(m);
    ArrayXc phase_begin(n), phase_mid(n), phase_end(n);
    ArrayXd p(m);

    Eigen::Index records = 0;
    const Eigen::Index s_pos = problem.searched_position;
    auto record = [&](std::int64_t step) {
        const double t = t0 + static_cast<double>(step) * dt;
        p = a.abs2();
        const double total = p.sum();
        if (!std::isfinite(total) || !v.allFinite()) {
            throw NonFiniteError("integrate: non-finite amplitude near t = " +
                                 std::to_string(t) + " (step " + std::to_string(step) +
                                 "); reduce dt");
        }
        double spectator = 0.0;
        for (Eigen::Index i = 0; i < m - 1; ++i) {
            if (i != s_pos) spectator = std::max(spectator, p(i));
        }
        out.times(records) = t;
        out.p_initial(records) = p(m - 1);
        out.p_searched(records) = p(s_pos);
        out.norm(records) = total;
        out.p_spectator_max(records) = spectator;
        if (config.record_modes) out.modes.row(records) = p.matrix().transpose();
        ++records;
    };

    record(0);
    const double half_dt = 0.5 * dt;
    const double sixth_dt = dt / 6.0;
    if (steps > 0) system.phases_at_step(t0, 0, 0.0, dt, phase_begin);
    for (std::int64_t k = 0; k < steps; ++k) {
        system.phases_at_step(t0, k, 0.5, dt, phase_mid);
        system.phases_at_step(t0, k + 1, 0.0, dt, phase_end);

        system.acceleration(a, v, phase_begin, dv1);
        a2 = a + half_dt * v;
        v2 = v + half_dt * dv1;
        system.acceleration(a2, v2, phase_mid, dv2);
        a3 = a + half_dt * v2;
        v3 = v + half_dt * dv2;
        system.acceleration(a3, v3, phase_mid, dv3);
        a4 = a + dt * v3;
        v4 = v + dt * dv3;
        system.acceleration(a4, v4, phase_end, dv4);

        a += sixth_dt * (v + 2.0 * (v2 + v3) + v4);
        v += sixth_dt * (dv1 + 2.0 * (dv2 + dv3) + dv4);
        phase_begin.swap(phase_end);

        if ((k + 1) % stride == 0 || k + 1 == steps) record(k + 1);
    }

    out.times.conservativeResize(records);
    out.p_initial.conservativeResize(records);
    out.p_searched.conservativeResize(records);
    out.norm.conservativeResize(records);
    out.p_spectator_max.conservativeResize(records);
    if (config.record_modes) out.modes.conservativeResize(records, m);

    if (final_state != nullptr) {
        final_state->t = t0 + static_cast<double>(steps) * dt;
        final_state->a = std::move(a);
        final_state->v = std::move(v);
    }
    return out;
}

double norm_deviation(const Trajectory& trajectory) {
    if (trajectory.sample_count() == 0) {
        throw ConfigError("norm_deviation: empty trajectory");
    }
    return (trajectory.norm.array() - 1.0).abs().maxCoeff();
}

}  // namespace wavesearch
