#include "wavesearch/rwa.hpp"

#include <cmath>

namespace wavesearch {

double rabi_frequency(const SearchProblem& problem) {
    return problem.spectrum.base_frequency /
           (2.0 * std::sqrt(static_cast<double>(problem.set_size())));
}

double optimal_time(const SearchProblem& problem) {
    return kPi / (2.0 * rabi_frequency(problem));
}

RwaModel build_rwa(const SearchProblem& problem) {
    RwaModel m;
    m.rabi = rabi_frequency(problem);
    m.tau = kPi / (2.0 * m.rabi);
    m.base_frequency = problem.spectrum.base_frequency;
    m.set_size = problem.set_size();
    m.initial_index = problem.initial_index;
    m.searched_position = problem.searched_position;
    return m;
}

std::pair<Complex, Complex> analytic_amplitudes(const RwaModel& model, double t) {
    const double phase = model.rabi * t;
    return {Complex(std::cos(phase), 0.0), Complex(0.0, std::sin(phase))};
}

double validity_ratio(const SearchProblem& problem) {
    const double omega_min =
        std::min(problem.spectrum.frequencies(0), problem.omega_initial());
    return omega_min / rabi_frequency(problem);
}

Trajectory sample_trajectory(const RwaModel& model, const Eigen::VectorXd& times) {
    Trajectory out;
    out.model = "rwa";
    out.tau = model.tau;
    out.dt = 0.0;
    out.mode_count = model.set_size + 1;
    out.searched_position = model.searched_position;
    const Eigen::Index m = times.size();
    out.times = times;
    out.p_initial.resize(m);
    out.p_searched.resize(m);
    out.norm.resize(m);
    out.p_spectator_max = Eigen::VectorXd::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto [aj, as] = analytic_amplitudes(model, times(i));
        out.p_initial(i) = std::norm(aj);
        out.p_searched(i) = std::norm(as);
        out.norm(i) = out.p_initial(i) + out.p_searched(i);
    }
    return out;
}

Trajectory sample_trajectory(const RwaModel& model, double t_max, Eigen::Index samples) {
    if (samples < 2 || !(t_max > 0.0)) {
        throw ConfigError("sample_trajectory: need t_max > 0 and at least 2 samples");
    }
    Eigen::VectorXd times = Eigen::VectorXd::LinSpaced(samples, 0.0, t_max);
    return sample_trajectory(model, times);
}

}  // namespace wavesearch
