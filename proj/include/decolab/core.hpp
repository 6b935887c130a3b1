// core.hpp — Density matrices, kernels, purity, partial trace, decoherence measures

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "decolab/quadrature.hpp"

namespace decolab::core {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Tolerances {
    double herm = 1e-10;
    double trace = 1e-10;
    double psd = 1e-8;
    double norm = 1e-10;
};

struct ValidationReport {
    bool valid = true;
    double herm_error = 0.0;     // max |rho_jk - conj(rho_kj)|
    double trace_error = 0.0;    // |tr rho - 1|
    double min_eigenvalue = 0.0; // smallest eigenvalue of the hermitized matrix
    std::vector<std::string> violations;
};

ValidationReport validate_density(const Matrix& rho, const Tolerances& tol = {});

// Throws std::invalid_argument with the report's violations if rho is not a
// valid density matrix.
void require_valid_density(const Matrix& rho, const Tolerances& tol = {});

// tr(rho^2), in [1/n, 1] for valid rho.
double purity(const Matrix& rho);

// Finite-dimensional decoherence measure (n/(n-1)) (1 - tr rho^2), in [0, 1].
// Requires n >= 2.
double decoherence_finite(const Matrix& rho);

// |c><c| for a normalized amplitude vector.
Matrix projector(const Vector& amplitudes);

// Checks Sum |c_j|^2 = 1 within tol.norm, throws otherwise.
void require_normalized(const Vector& amplitudes, const Tolerances& tol = {});

struct BipartitePureState {
    Eigen::Index dim_a = 0;
    Eigen::Index dim_b = 0;
    Vector amplitudes; // psi_ab flattened with b fastest: index = a * dim_b + b

    // View of the amplitudes as a dim_a x dim_b matrix.
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
    as_matrix() const;
};

enum class Side { a, b };

// Reduced density matrix of the kept side of |Psi><Psi|.
Matrix partial_trace(const BipartitePureState& psi, Side keep);

// Generalized concurrence E = sqrt(2 (1 - tr rho_a^2)) of a bipartite pure state.
double concurrence_pure(const BipartitePureState& psi);

// Reduced kernel rho(x, x') for a continuous degree of freedom, given either as
// an analytic closure or as a wrapper over grid samples.
struct ContinuousKernel {
    std::function<Complex(double, double)> eval;
    double x_min = 0.0;
    double x_max = 0.0;
    // Optional separate domain for the second argument; NaN means "same as x".
    // Used by block states whose off-diagonal kernels live off the diagonal.
    double xp_min = std::numeric_limits<double>::quiet_NaN();
    double xp_max = std::numeric_limits<double>::quiet_NaN();
    quad::QuadratureSpec quadrature{};

    double xp_lo() const { return std::isnan(xp_min) ? x_min : xp_min; }
    double xp_hi() const { return std::isnan(xp_max) ? x_max : xp_max; }
};

// Integral of rho(x, x) over the kernel domain.
double kernel_trace(const ContinuousKernel& k);

// Kernel scaled to unit trace.
ContinuousKernel normalized(const ContinuousKernel& k);

// Integral of |rho(x, x')|^2 over the domain square, without renormalization.
double kernel_purity_raw(const ContinuousKernel& k);

// Continuous decoherence measure 1 - tr rho^2 of the unit-trace renormalized
// kernel. Throws quad::QuadratureError on non-convergence.
double decoherence_continuous(const ContinuousKernel& k);

} // namespace decolab::core
