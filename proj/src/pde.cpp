#include "decolab/pde.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace decolab::pde {

using Eigen::MatrixXcd;
using std::numbers::pi;

double MasterEquationGrid::stable_dt() const {
    return stability_factor * 2.0 * std::sqrt(2.0) * m * h() * h() / (4.0 * hbar);
}

double lambda_from_thermal(double m, double T, double gamma, double hbar, double kB) {
    return 2.0 * m * gamma * kB * T / (hbar * hbar);
}

double GridKernel::trace() const {
    double tr = 0.0;
    for (int i = 0; i < n(); ++i) tr += values(i, i).real();
    return tr * h();
}

double GridKernel::purity() const {
    return values.cwiseAbs2().sum() * h() * h();
}

GridKernel sample(const core::ContinuousKernel& k, int n, double X) {
    GridKernel g;
    g.X = X;
    g.values.resize(n, n);
    const double h = 2.0 * X / (n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.values(i, j) = k.eval(-X + h * i, -X + h * j);
    return g;
}

double rel_l2(const GridKernel& a, const GridKernel& b) {
    if (a.n() != b.n()) throw std::invalid_argument("rel_l2: shape mismatch");
    const double diff = std::sqrt((a.values - b.values).cwiseAbs2().sum());
    const double ref = std::sqrt(b.values.cwiseAbs2().sum());
    return diff / ref;
}

namespace {

// Kinetic + friction right-hand side with Dirichlet boundaries.
void rhs(const MasterEquationGrid& grid, const MatrixXcd& rho, MatrixXcd& out) {
    const int n = grid.n;
    const double h = grid.h();
    const Complex kin = Complex(0.0, 1.0) * grid.hbar / (2.0 * grid.m * h * h);
    const double fr = grid.gamma / (2.0 * h);
    out.setZero();
    for (int i = 1; i + 1 < n; ++i) {
        const double xi = -grid.X + h * i;
        for (int j = 1; j + 1 < n; ++j) {
            const double xj = -grid.X + h * j;
            const Complex lap_x = rho(i + 1, j) - 2.0 * rho(i, j) + rho(i - 1, j);
            const Complex lap_xp = rho(i, j + 1) - 2.0 * rho(i, j) + rho(i, j - 1);
            const Complex grad = (rho(i + 1, j) - rho(i - 1, j)) -
                                 (rho(i, j + 1) - rho(i, j - 1));
            out(i, j) = kin * (lap_x - lap_xp) - fr * (xi - xj) * grad;
        }
    }
}

void check_boundary_mass(const GridKernel& g) {
    const int n = g.n();
    double edge = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i < 3 || i >= n - 3) edge += std::abs(g.values(i, i).real());
    }
    edge *= g.h();
    if (edge > 1e-6) throw std::runtime_error("evolve_master_pde: boundary contamination");
}

} // namespace

GridKernel evolve_master_pde(const MasterEquationGrid& grid, const GridKernel& initial,
                             double t_end, CouplingModel /*model*/) {
    if (initial.n() != grid.n || initial.X != grid.X)
        throw std::invalid_argument("evolve_master_pde: initial kernel does not match grid");
    if (t_end < 0.0) throw std::invalid_argument("evolve_master_pde: t_end must be >= 0");
    check_boundary_mass(initial);

    const double dt_limit = grid.stable_dt() / grid.stability_factor;
    double dt = grid.dt > 0.0 ? grid.dt : grid.stable_dt();
    if (dt > dt_limit) throw std::invalid_argument("evolve_master_pde: dt violates stability bound");
    const int n_steps = std::max(1, static_cast<int>(std::ceil(t_end / dt)));
    dt = t_end / n_steps;

    const int n = grid.n;
    const double h = grid.h();

    // Exact per-step decoherence multiplier exp(-Lambda (x - x')^2 dt).
    Eigen::MatrixXd damp(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double d = h * (i - j);
            damp(i, j) = std::exp(-grid.lambda * d * d * dt);
        }

    MatrixXcd rho = initial.values;
    MatrixXcd k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n);
    for (int s = 0; s < n_steps; ++s) {
        rhs(grid, rho, k1);
        tmp = rho + (0.5 * dt) * k1;
        rhs(grid, tmp, k2);
        tmp = rho + (0.5 * dt) * k2;
        rhs(grid, tmp, k3);
        tmp = rho + dt * k3;
        rhs(grid, tmp, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = rho.cwiseProduct(damp.cast<Complex>());
        rho = 0.5 * (rho + rho.adjoint().eval());
    }

    GridKernel out;
    out.X = grid.X;
    out.values = std::move(rho);
    check_boundary_mass(out);
    return out;
}

} // namespace decolab::pde
