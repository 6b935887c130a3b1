// spin_boson.hpp — Pure-dephasing two-level dynamics: analytic solution and a
// step-refined RK4 master-equation integrator

#pragma once

#include <vector>

#include "decolab/core.hpp"

namespace decolab::spinboson {

using core::Complex;
using core::Matrix;

struct SpinBosonParams {
    double omega_s = 1.0; // level splitting
    double gamma = 0.0;   // dephasing rate, >= 0
    Matrix initial;       // defaults to the equal-superposition projector when empty

    Matrix initial_state() const;
};

// Equal-superposition projector (|0> + |1>)/sqrt(2).
Matrix equal_superposition();

// Closed-form rho(t) for the equal-superposition initial state:
// diagonal 1/2, off-diagonal (1/2) exp(-/+ i omega_s t) exp(-2 gamma t).
// Throws if the configured initial state is not the equal superposition.
Matrix analytic_rho(const SpinBosonParams& p, double t);

// Closed-form decoherence measure 1 - exp(-4 gamma t).
double de_analytic(const SpinBosonParams& p, double t);

struct StepControl {
    double tol = 1e-8;     // target max elementwise Richardson error at grid points
    int initial_substeps = 4; // per output interval
    int max_refinements = 16;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Matrix> states;
};

// Integrates d rho/dt = -i (omega_s/2)[sigma_z, rho] + gamma sigma_z rho sigma_z
// - gamma rho with classic RK4, doubling the substep count until the
// Richardson error estimate at every output time is below control.tol.
// Throws std::runtime_error if the estimate stops decreasing before reaching it.
Trajectory integrate_master(const SpinBosonParams& p, const std::vector<double>& t_grid,
                            const StepControl& control = {});

Trajectory integrate_master(const SpinBosonParams& p, double t_end, int n_out = 101,
                            const StepControl& control = {});

} // namespace decolab::spinboson
