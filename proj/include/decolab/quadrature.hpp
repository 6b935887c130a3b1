// quadrature.hpp — Gauss-Legendre rules with node-doubling convergence control

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace decolab::quad {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendre(int n);
};

// Cached rule lookup (rules are reused heavily by the doubling loops).
const GaussLegendre& rule(int n);

struct QuadratureSpec {
    int initial_nodes = 32;
    int max_nodes = 4096;
    double tol = 1e-6;
};

// Fixed-order integrals. The complex variants carry their own names so that
// lambdas (convertible to either std::function) bind unambiguously.
double integrate(const std::function<double(double)>& f, double a, double b, int n);
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, int n);
double integrate2d(const std::function<double(double, double)>& f,
                   double ax, double bx, double ay, double by, int n);

// Node doubling until successive values differ by less than spec.tol.
// Throws QuadratureError if the doubling sequence does not settle.
double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b, const QuadratureSpec& spec);
std::complex<double>
integrate_adaptive_complex(const std::function<std::complex<double>(double)>& f,
                           double a, double b, const QuadratureSpec& spec);
double integrate2d_adaptive(const std::function<double(double, double)>& f,
                            double ax, double bx, double ay, double by,
                            const QuadratureSpec& spec);

} // namespace decolab::quad
