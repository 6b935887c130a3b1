#include "decolab/spin_boson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace decolab::spinboson {

namespace {

Matrix sigma_z() {
    Matrix s(2, 2);
    s << 1.0, 0.0, 0.0, -1.0;
    return s;
}

Matrix rhs(const SpinBosonParams& p, const Matrix& rho) {
    static const Matrix sz = sigma_z();
    const Complex im(0.0, 1.0);
    return -im * (p.omega_s / 2.0) * (sz * rho - rho * sz) + p.gamma * (sz * rho * sz - rho);
}

Matrix rk4_span(const SpinBosonParams& p, Matrix rho, double t0, double t1, int steps) {
    const double h = (t1 - t0) / steps;
    for (int s = 0; s < steps; ++s) {
        Matrix k1 = rhs(p, rho);
        Matrix k2 = rhs(p, rho + 0.5 * h * k1);
        Matrix k3 = rhs(p, rho + 0.5 * h * k2);
        Matrix k4 = rhs(p, rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return rho;
}

Trajectory run_grid(const SpinBosonParams& p, const std::vector<double>& t_grid,
                    int substeps) {
    Trajectory traj;
    traj.times = t_grid;
    traj.states.reserve(t_grid.size());
    Matrix rho = p.initial_state();
    double t_prev = 0.0;
    for (double t : t_grid) {
        if (t > t_prev) rho = rk4_span(p, rho, t_prev, t, substeps);
        else if (t < t_prev)
            throw std::invalid_argument("integrate_master: time grid must be nondecreasing");
        traj.states.push_back(rho);
        t_prev = t;
    }
    return traj;
}

double max_deviation(const Trajectory& a, const Trajectory& b) {
    double err = 0.0;
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        const double d = (a.states[i] - b.states[i]).cwiseAbs().maxCoeff();
        // Overflowed or NaN states must read as failure, not as agreement.
        if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
        err = std::max(err, d);
    }
    return err;
}

} // namespace

Matrix SpinBosonParams::initial_state() const {
    if (initial.size() == 0) return equal_superposition();
    core::require_valid_density(initial);
    return initial;
}

Matrix equal_superposition() {
    Matrix rho(2, 2);
    rho << 0.5, 0.5, 0.5, 0.5;
    return rho;
}

Matrix analytic_rho(const SpinBosonParams& p, double t) {
    if ((p.initial_state() - equal_superposition()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("analytic_rho: initial state must be the equal superposition");
    const Complex im(0.0, 1.0);
    const Complex off = 0.5 * std::exp(-im * p.omega_s * t) * std::exp(-2.0 * p.gamma * t);
    Matrix rho(2, 2);
    rho << 0.5, off, std::conj(off), 0.5;
    return rho;
}

double de_analytic(const SpinBosonParams& p, double t) {
    if (p.gamma < 0.0) throw std::invalid_argument("de_analytic: gamma must be >= 0");
    return 1.0 - std::exp(-4.0 * p.gamma * t);
}

Trajectory integrate_master(const SpinBosonParams& p, const std::vector<double>& t_grid,
                            const StepControl& control) {
    if (t_grid.empty()) throw std::invalid_argument("integrate_master: empty time grid");
    int substeps = control.initial_substeps;
    Trajectory coarse = run_grid(p, t_grid, substeps);
    double prev_err = std::numeric_limits<double>::infinity();
    for (int r = 0; r < control.max_refinements; ++r) {
        Trajectory fine = run_grid(p, t_grid, substeps * 2);
        const double err = max_deviation(coarse, fine);
        if (err < control.tol) return fine;
        if (err >= prev_err)
            throw std::runtime_error("integrate_master: error estimate not decreasing");
        prev_err = err;
        coarse = std::move(fine);
        substeps *= 2;
    }
    throw std::runtime_error("integrate_master: step refinement limit reached");
}

Trajectory integrate_master(const SpinBosonParams& p, double t_end, int n_out,
                            const StepControl& control) {
    if (n_out < 2) throw std::invalid_argument("integrate_master: need >= 2 output points");
    std::vector<double> grid(n_out);
    for (int i = 0; i < n_out; ++i) grid[i] = t_end * i / (n_out - 1);
    return integrate_master(p, grid, control);
}

} // namespace decolab::spinboson
