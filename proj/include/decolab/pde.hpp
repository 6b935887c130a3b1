// pde.hpp — Finite-difference master-equation integrator for the free-particle
// models on an (x, x') grid

#pragma once

#include "decolab/core.hpp"

namespace decolab::pde {

using core::Complex;

enum class CouplingModel { momentum_coupling, position_coupling };

// Both master equations share the form
//   d rho/dt = (i hbar / 2m)(d^2/dx^2 - d^2/dx'^2) rho
//              - gamma (x - x')(d/dx - d/dx') rho
//              - Lambda (x - x')^2 rho,
// with Lambda = 4 pi gamma / lambda_T^2 = 2 m gamma kB T / hbar^2
// (the two coefficient conventions coincide through lambda_T^2 = 2 pi hbar^2 / m kB T).
struct MasterEquationGrid {
    int n = 256;       // points per axis
    double X = 8.0;    // domain [-X, X]
    double m = 1.0;
    double gamma = 0.0;
    double lambda = 0.0; // decoherence coefficient Lambda
    double hbar = 1.0;
    double dt = 0.0;   // 0 = pick from the stability bound
    double stability_factor = 0.2; // fraction of the RK4 imaginary-axis limit

    double h() const { return 2.0 * X / (n - 1); }
    // RK4 on the centered kinetic stencil is stable for
    // dt <= 2 sqrt(2) m h^2 / (4 hbar); we stay a safety factor below it.
    double stable_dt() const;
};

double lambda_from_thermal(double m, double T, double gamma, double hbar = 1.0, double kB = 1.0);

struct GridKernel {
    Eigen::MatrixXcd values; // values(i, j) = rho(x_i, x'_j)
    double X = 0.0;

    int n() const { return static_cast<int>(values.rows()); }
    double h() const { return 2.0 * X / (n() - 1); }
    double x(int i) const { return -X + h() * i; }
    double trace() const;     // h * sum of the diagonal
    double purity() const;    // h^2 * sum |rho|^2
};

// Samples an analytic kernel onto the grid.
GridKernel sample(const core::ContinuousKernel& k, int n, double X);

// Relative L2 distance between two grid kernels of identical shape.
double rel_l2(const GridKernel& a, const GridKernel& b);

// Evolves the sampled initial kernel to t_end. The decoherence term is applied
// as an exact exponential factor per step; kinetic and friction terms go through
// RK4 on centered differences; Hermiticity is enforced by mirroring across the
// diagonal each step. Throws on stability violation or when more than 1e-6 of
// the diagonal mass sits within 3h of the boundary.
GridKernel evolve_master_pde(const MasterEquationGrid& grid, const GridKernel& initial,
                             double t_end, CouplingModel model);

} // namespace decolab::pde
