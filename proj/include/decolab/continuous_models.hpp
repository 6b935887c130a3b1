// continuous_models.hpp — Free-particle decoherence: plane-wave and Gaussian
// kernels, closed-form measures, and quadrature oracles

#pragma once

#include "decolab/core.hpp"

namespace decolab::contmodels {

using core::Complex;
using core::ContinuousKernel;

// Thermal de Broglie wavelength sqrt(2 pi hbar^2 / (m kB T)).
double thermal_wavelength(double m, double T, double hbar = 1.0, double kB = 1.0);

struct PlaneWaveParams {
    double k = 1.0;        // wave vector
    double L = 1.0;        // half-width of the confining region
    double lambda_T = 1.0; // thermal de Broglie wavelength
    double gamma = 0.0;    // relaxation rate

    double tau_D() const; // lambda_T^2 / (4 pi gamma L^2)
};

// Off-diagonal width parameter sigma(t) = (pi / lambda_T^2)(1 - exp(-4 gamma t));
// the short-time variant uses 4 pi gamma t / lambda_T^2.
double sigma_of_t(const PlaneWaveParams& p, double t, bool short_time = false);

// rho(x, x', t) = (1/2L) exp(-i exp(-2 gamma t) k (x - x')) exp(-sigma (x - x')^2)
// on [-L, L], unit trace.
ContinuousKernel plane_wave_kernel(const PlaneWaveParams& p, double t);

// Closed forms parametrized by z = sqrt(2 sigma) L.
double de_plane_wave_paper_from_z(double z);  // 1 - sqrt(pi) erf(z) / (2 z)
double de_plane_wave_exact_from_z(double z);  // 1 - sqrt(pi) erf(2z)/(2z) + (1-exp(-4z^2))/(4z^2)

// erf-based closed form of the measure.
double de_plane_wave_paper(const PlaneWaveParams& p, double t);

// Independent oracle: exact reduction of the double integral to
// 1 - (1/4L^2) int_{-2L}^{2L} (2L - |u|) exp(-2 sigma u^2) du, evaluated by
// adaptive quadrature to 1e-8.
double de_plane_wave_oracle(const PlaneWaveParams& p, double t);

struct GaussianMomentumParams {
    double sigma = 1.0; // wave-packet parameter, position spread 2 sigma
    double m = 1.0;
    double T = 1.0;  // temperature (enters via kB T)
    double gamma = 0.0;
    double hbar = 1.0;
    double kB = 1.0;

    // Kernel coefficients of exp(i b r R / c) exp(-R^2/4c) exp(-(a - b^2/c) r^2),
    // with r = x - x' and R = x + x'.
    double a() const;
    double b(double t) const;
    double c(double t) const;
};

// rho(x, x', t) in the gamma t << 1 limit, unit trace.
ContinuousKernel gaussian_momentum_kernel(const GaussianMomentumParams& p, double t);

// 1 - 1/sqrt(1 + 16 kB T gamma t^3 / (m sigma^2)).
double gaussian_momentum_de(const GaussianMomentumParams& p, double t);

struct GaussianPositionParams {
    double sigma = 1.0;
    double m = 1.0;
    double T = 1.0;
    double gamma = 0.0;
    double hbar = 1.0;
    double kB = 1.0;

    double tau_D() const; // hbar^2 / (8 m gamma kB T sigma^2)
};

// Printed kernel (not unit trace; renormalized by the measure):
// rho(R, r) = (2 pi sigma^2)^{-1/2} exp(-2 m gamma kB T r^2 t / hbar^2
//                                        - (R^2 + r^2)/(4 sigma^2)).
ContinuousKernel gaussian_position_kernel(const GaussianPositionParams& p, double t);

// 1 - 1/sqrt(1 + t/tau_D).
double gaussian_position_de(const GaussianPositionParams& p, double t);

} // namespace decolab::contmodels
