// dynamics.hpp — full coupled amplitude ODE system and fixed-step RK4 driver
#pragma once

#include "wavesearch/spectrum.hpp"
#include "wavesearch/trajectory.hpp"
#include "wavesearch/types.hpp"

#include <cstdint>
#include <utility>

namespace wavesearch {

// Complex amplitudes a_n and their derivatives v_n = da_n/dt at time t.
// Mode order: spectrum modes first (spectrum order), initial mode j last.
struct AmplitudeState {
    double t = 0.0;
    ArrayXc a;
    ArrayXc v;

    Eigen::Index mode_count() const { return a.size(); }
    bool finite() const { return a.allFinite() && v.allFinite(); }
};

struct IntegratorConfig {
    int samples_per_fastest_period = 32;  // dt = (2π/ω_max) / this
    double t_max = 0.0;
    Eigen::Index record_stride = 0;       // record every k-th step; 0 = auto (~2000 records)
    std::int64_t max_steps = 100'000'000;
    bool record_modes = false;            // keep the full per-mode P matrix
    double drive_scale = 1.0;             // multiplies the perturbation; 0 = free modes
};

// Step size implied by a config: (2π/ω_max)/samples with ω_max over spectrum ∪ {j}.
double step_size(const SearchProblem& problem, const IntegratorConfig& config);

// Precomputed right-hand side of the coupled amplitude equations,
//   d²a_n/dt² − 2iω_n da_n/dt =
//     −(ω₀/√N)·{ ω_n(1−δ_nj)·a_j·e^{iω_sn t} + ω_j δ_nj·Σ_{l∈N} a_l·e^{iω_ls t} },
// reduced to first order in (a, v). The Σ over the search set appears only in
// the j row, so one evaluation is O(N).
class CoupledModeSystem {
  public:
    explicit CoupledModeSystem(const SearchProblem& problem, double drive_scale = 1.0);

    Eigen::Index mode_count() const { return set_size_ + 1; }
    Eigen::Index set_size() const { return set_size_; }
    double base_frequency() const { return omega0_; }
    double max_frequency() const { return omega_max_; }

    // Fills phase(m) = e^{i(ω_m − ω_s)t} for the N spectrum modes. The row-n
    // drive uses phase(n) directly and the j row uses its conjugate, so one
    // vector serves the whole system. Angles are formed as (index_m −
    // index_s)·φ with φ = ω₀t reduced once in extended precision; over 10⁶+
    // steps this keeps phases accurate where naive ω·t accumulation drifts.
    void phases_at(double t, ArrayXc& phase) const;
    // Same, for t = t0 + (step + stage_frac)·dt without forming t in double.
    void phases_at_step(double t0, std::int64_t step, double stage_frac, double dt,
                        ArrayXc& phase) const;

    // dv/dt given (a, v) and the phase vector; da/dt is v itself.
    void acceleration(const ArrayXc& a, const ArrayXc& v, const ArrayXc& phase,
                      ArrayXc& dv) const;

  private:
    void fill_phases(double reduced_base_angle, ArrayXc& phase) const;

    Eigen::Index set_size_;
    double omega0_;
    double omega_max_;
    double coupling_;          // drive_scale·ω₀/√N
    ArrayXd detune_index_;     // index_n − index_s per spectrum mode
    ArrayXc two_i_omega_;      // 2iω_m, all N+1 modes
    ArrayXc drive_row_;        // coupling·ω_n per spectrum mode
    double drive_j_;           // coupling·ω_j
    mutable ArrayXd theta_;    // angle workspace
};

// The (da/dt, dv/dt) pair at the state's own time. Convenience entry point
// around CoupledModeSystem for tests and callers outside the step loop.
std::pair<ArrayXc, ArrayXc> rhs(const SearchProblem& problem, const AmplitudeState& state);

// Raw perturbation matrix elements ⟨n|V(t)|Ψ⟩, one per mode (spectrum order,
// j last): (1/√N)·a_j·e^{iω_sj t} for n ≠ j and (1/√N)·e^{−iω_sj t}·Σ_{l∈N}
// a_l·e^{−iω_l t} for n = j. Diagnostic only (transition-probability checks);
// the integrator consumes the projected equations directly.
VectorXc coupling_elements(const SearchProblem& problem, const AmplitudeState& state);

// Canonical start: a_j = 1, everything else 0, v = 0, t = 0.
AmplitudeState default_initial(const SearchProblem& problem);

// Like default_initial but with v(0) entries drawn uniformly from
// [−band, band] on both components, reproducibly from the seed.
AmplitudeState randomized_initial(const SearchProblem& problem, double band,
                                  std::uint64_t seed);

// Classic fixed-step RK4 on the 2(N+1)-dimensional complex first-order
// system. Records every record_stride steps plus the final step. Throws
// NonFiniteError if an amplitude leaves the finite range (dt too large) and
// StepCapExceeded if t_max/dt breaks the step cap. If final_state is given
// it receives the end-of-run state (for chaining / snapshots).
Trajectory integrate(const SearchProblem& problem, const IntegratorConfig& config,
                     const AmplitudeState& initial, AmplitudeState* final_state = nullptr);

// max over recorded times of |Σ_n P_n(t) − 1|
double norm_deviation(const Trajectory& trajectory);

}  // namespace wavesearch
