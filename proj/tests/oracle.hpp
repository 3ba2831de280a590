// oracle.hpp — independent cross-check integrator, test code only.
//
// Explicit midpoint on the same coupled amplitude equations, written from
// scratch with plain std::complex loops: it shares nothing with the library's
// right-hand side, phase handling, or stepping, so agreement between the two
// is a genuine dual-route check. Meant to run at a fraction (typically 1/10)
// of the main integrator's step.
#pragma once

#include "wavesearch/rwa.hpp"
#include "wavesearch/spectrum.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace wavesearch::oracle {

struct OracleResult {
    double tau = 0.0;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<double> p_initial;
    std::vector<double> p_searched;
    std::vector<double> norm;
    std::vector<double> p_spectator_max;
    std::vector<std::complex<double>> final_a;
    std::vector<std::complex<double>> final_v;
};

inline OracleResult integrate_midpoint(const SearchProblem& problem, double dt,
                                       double t_max, std::int64_t record_every) {
    using C = std::complex<double>;
    const auto n = static_cast<std::size_t>(problem.set_size());
    const std::size_t m = n + 1;
    const double omega0 = problem.spectrum.base_frequency;
    std::vector<double> omega(m);
    for (std::size_t i = 0; i < n; ++i) omega[i] = problem.spectrum.frequencies(i);
    omega[n] = omega0 * static_cast<double>(problem.initial_index);
    const double omega_s = problem.omega_searched();
    const double g = omega0 / std::sqrt(static_cast<double>(n));
    const auto s_pos = static_cast<std::size_t>(problem.searched_position);

    std::vector<C> a(m, C(0.0, 0.0)), v(m, C(0.0, 0.0));
    a[n] = C(1.0, 0.0);

    auto acc = [&](double t, const std::vector<C>& aa, const std::vector<C>& vv,
                   std::vector<C>& out) {
        C sum(0.0, 0.0);
        for (std::size_t l = 0; l < n; ++l) {
            sum += aa[l] * std::polar(1.0, (omega_s - omega[l]) * t);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const C drive = aa[n] * std::polar(1.0, (omega[i] - omega_s) * t);
            out[i] = C(0.0, 2.0 * omega[i]) * vv[i] - g * omega[i] * drive;
        }
        out[n] = C(0.0, 2.0 * omega[n]) * vv[n] - g * omega[n] * sum;
    };

    const auto steps = static_cast<std::int64_t>(std::llround(std::ceil(t_max / dt - 1e-9)));
    OracleResult r;
    r.tau = optimal_time(problem);
    r.dt = dt;

    std::vector<C> ka(m), kv(m), am(m), vm(m), ka2(m), kv2(m);
    auto record = [&](double t) {
        double total = 0.0, spectator = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double p = std::norm(a[i]);
            total += p;
            if (i != s_pos && i != n) spectator = std::max(spectator, p);
        }
        r.times.push_back(t);
        r.p_initial.push_back(std::norm(a[n]));
        r.p_searched.push_back(std::norm(a[s_pos]));
        r.norm.push_back(total);
        r.p_spectator_max.push_back(spectator);
    };

    record(0.0);
    for (std::int64_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        acc(t, a, v, kv);
        for (std::size_t i = 0; i < m; ++i) {
            am[i] = a[i] + 0.5 * dt * v[i];
            vm[i] = v[i] + 0.5 * dt * kv[i];
        }
        acc(t + 0.5 * dt, am, vm, kv2);
        for (std::size_t i = 0; i < m; ++i) {
            a[i] += dt * vm[i];
            v[i] += dt * kv2[i];
        }
        if ((k + 1) % record_every == 0 || k + 1 == steps) {
            record(static_cast<double>(k + 1) * dt);
        }
    }
    r.final_a = a;
    r.final_v = v;
    return r;
}

}  // namespace wavesearch::oracle
