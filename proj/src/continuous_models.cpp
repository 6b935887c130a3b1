#include "decolab/continuous_models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace decolab::contmodels {

using std::numbers::pi;

double thermal_wavelength(double m, double T, double hbar, double kB) {
    if (m <= 0.0 || T <= 0.0) throw std::invalid_argument("thermal_wavelength: m, T must be > 0");
    return std::sqrt(2.0 * pi * hbar * hbar / (m * kB * T));
}

double PlaneWaveParams::tau_D() const {
    return lambda_T * lambda_T / (4.0 * pi * gamma * L * L);
}

double sigma_of_t(const PlaneWaveParams& p, double t, bool short_time) {
    if (t < 0.0) throw std::invalid_argument("sigma_of_t: t must be >= 0");
    const double rate = 4.0 * pi * p.gamma / (p.lambda_T * p.lambda_T);
    if (short_time) return rate * t;
    return (pi / (p.lambda_T * p.lambda_T)) * (1.0 - std::exp(-4.0 * p.gamma * t));
}

ContinuousKernel plane_wave_kernel(const PlaneWaveParams& p, double t) {
    const double sigma = sigma_of_t(p, t);
    const double keff = std::exp(-2.0 * p.gamma * t) * p.k;
    const double L = p.L;
    ContinuousKernel kern;
    kern.x_min = -L;
    kern.x_max = L;
    kern.eval = [sigma, keff, L](double x, double xp) {
        const double d = x - xp;
        return (0.5 / L) * std::exp(Complex(-sigma * d * d, -keff * d));
    };
    return kern;
}

double de_plane_wave_paper_from_z(double z) {
    if (z < 1e-4) return z * z / 3.0; // series limit, continuous at z = 0
    return 1.0 - std::sqrt(pi) * std::erf(z) / (2.0 * z);
}

double de_plane_wave_exact_from_z(double z) {
    if (z < 1e-4) return 2.0 * z * z / 3.0;
    const double z2 = z * z;
    return 1.0 - std::sqrt(pi) * std::erf(2.0 * z) / (2.0 * z) +
           (1.0 - std::exp(-4.0 * z2)) / (4.0 * z2);
}

double de_plane_wave_paper(const PlaneWaveParams& p, double t) {
    const double z = std::sqrt(2.0 * sigma_of_t(p, t)) * p.L;
    return de_plane_wave_paper_from_z(z);
}

double de_plane_wave_oracle(const PlaneWaveParams& p, double t) {
    const double sigma = sigma_of_t(p, t);
    const double L = p.L;
    if (sigma == 0.0) return 0.0;
    // Triangular-window reduction of the double integral over [-L, L]^2.
    const std::function<double(double)> integrand = [sigma, L](double u) {
        return (2.0 * L - std::abs(u)) * std::exp(-2.0 * sigma * u * u);
    };
    quad::QuadratureSpec spec;
    spec.tol = 1e-8;
    spec.initial_nodes = 64;
    spec.max_nodes = 1 << 15;
    // Split at u = 0 where the window has a kink.
    const double integral = quad::integrate_adaptive(integrand, -2.0 * L, 0.0, spec) +
                            quad::integrate_adaptive(integrand, 0.0, 2.0 * L, spec);
    return 1.0 - integral / (4.0 * L * L);
}

double GaussianMomentumParams::a() const { return 1.0 / (4.0 * sigma * sigma); }

double GaussianMomentumParams::b(double t) const {
    return hbar * t / (2.0 * m * sigma * sigma);
}

double GaussianMomentumParams::c(double t) const {
    const double spread = hbar * t / (sigma * m);
    return sigma * sigma + spread * spread + 16.0 * kB * T * gamma * t * t * t / m;
}

ContinuousKernel gaussian_momentum_kernel(const GaussianMomentumParams& p, double t) {
    if (p.sigma <= 0.0 || p.m <= 0.0 || p.T <= 0.0)
        throw std::invalid_argument("gaussian momentum: sigma, m, T must be > 0");
    const double a = p.a(), b = p.b(t), c = p.c(t);
    const double decay = a - b * b / c;
    ContinuousKernel kern;
    // c grows with t; 8 standard widths of the diagonal Gaussian.
    const double width = 8.0 * std::sqrt(c);
    kern.x_min = -width;
    kern.x_max = width;
    kern.eval = [a, b, c, decay](double x, double xp) {
        const double R = x + xp, r = x - xp;
        // Phase sign fixed by forward Schrödinger evolution with r = x - x'.
        return (1.0 / std::sqrt(pi * c)) *
               std::exp(Complex(-R * R / (4.0 * c) - decay * r * r, b * r * R / c));
    };
    return kern;
}

double gaussian_momentum_de(const GaussianMomentumParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("gaussian_momentum_de: t must be >= 0");
    const double x = 16.0 * p.kB * p.T * p.gamma * t * t * t / (p.m * p.sigma * p.sigma);
    return 1.0 - 1.0 / std::sqrt(1.0 + x);
}

double GaussianPositionParams::tau_D() const {
    return hbar * hbar / (8.0 * m * gamma * kB * T * sigma * sigma);
}

ContinuousKernel gaussian_position_kernel(const GaussianPositionParams& p, double t) {
    if (p.sigma <= 0.0 || p.m <= 0.0 || p.T <= 0.0)
        throw std::invalid_argument("gaussian position: sigma, m, T must be > 0");
    const double s2 = p.sigma * p.sigma;
    const double decay = 2.0 * p.m * p.gamma * p.kB * p.T * t / (p.hbar * p.hbar);
    ContinuousKernel kern;
    const double width = 8.0 * p.sigma;
    kern.x_min = -width;
    kern.x_max = width;
    kern.eval = [s2, decay](double x, double xp) {
        const double R = x + xp, r = x - xp;
        return Complex(1.0 / std::sqrt(2.0 * pi * s2) *
                           std::exp(-decay * r * r - (R * R + r * r) / (4.0 * s2)),
                       0.0);
    };
    return kern;
}

double gaussian_position_de(const GaussianPositionParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("gaussian_position_de: t must be >= 0");
    return 1.0 - 1.0 / std::sqrt(1.0 + t / p.tau_D());
}

} // namespace decolab::contmodels
