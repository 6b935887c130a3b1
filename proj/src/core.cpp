#include "decolab/core.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace decolab::core {

ValidationReport validate_density(const Matrix& rho, const Tolerances& tol) {
    ValidationReport rep;
    if (rho.rows() != rho.cols() || rho.rows() < 1) {
        rep.valid = false;
        rep.violations.push_back("matrix is not square or empty");
        return rep;
    }
    rep.herm_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (rep.herm_error > tol.herm) {
        rep.valid = false;
        std::ostringstream os;
        os << "hermiticity violated by " << rep.herm_error;
        rep.violations.push_back(os.str());
    }
    rep.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (rep.trace_error > tol.trace) {
        rep.valid = false;
        std::ostringstream os;
        os << "trace deviates from 1 by " << rep.trace_error;
        rep.violations.push_back(os.str());
    }
    Matrix herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    rep.min_eigenvalue = es.eigenvalues().minCoeff();
    if (rep.min_eigenvalue < -tol.psd) {
        rep.valid = false;
        std::ostringstream os;
        os << "negative eigenvalue " << rep.min_eigenvalue;
        rep.violations.push_back(os.str());
    }
    return rep;
}

void require_valid_density(const Matrix& rho, const Tolerances& tol) {
    auto rep = validate_density(rho, tol);
    if (!rep.valid) {
        std::string msg = "invalid density matrix:";
        for (const auto& v : rep.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
}

double purity(const Matrix& rho) {
    require_valid_density(rho);
    // tr(rho^2) = sum_jk rho_jk rho_kj = sum |rho_jk|^2 for Hermitian rho.
    return rho.cwiseAbs2().sum();
}

double decoherence_finite(const Matrix& rho) {
    const auto n = rho.rows();
    if (n < 2) throw std::invalid_argument("decoherence_finite: dimension must be >= 2");
    const double nn = static_cast<double>(n);
    return nn / (nn - 1.0) * (1.0 - purity(rho));
}

Matrix projector(const Vector& amplitudes) {
    require_normalized(amplitudes);
    return amplitudes * amplitudes.adjoint();
}

void require_normalized(const Vector& amplitudes, const Tolerances& tol) {
    if (amplitudes.size() < 1) throw std::invalid_argument("empty amplitude vector");
    const double norm_err = std::abs(amplitudes.squaredNorm() - 1.0);
    if (norm_err > tol.norm) {
        std::ostringstream os;
        os << "amplitude vector norm deviates from 1 by " << norm_err;
        throw std::invalid_argument(os.str());
    }
}

Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
BipartitePureState::as_matrix() const {
    if (dim_a * dim_b != amplitudes.size())
        throw std::invalid_argument("bipartite state: dims do not match amplitude length");
    return {amplitudes.data(), dim_a, dim_b};
}

Matrix partial_trace(const BipartitePureState& psi, Side keep) {
    require_normalized(psi.amplitudes);
    auto m = psi.as_matrix();
    if (keep == Side::a) return m * m.adjoint();
    return (m.adjoint() * m).conjugate(); // rho_b = psi^T psi^*
}

double concurrence_pure(const BipartitePureState& psi) {
    Matrix rho_a = partial_trace(psi, Side::a);
    const double p = rho_a.cwiseAbs2().sum();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

double kernel_trace(const ContinuousKernel& k) {
    auto diag = [&k](double x) { return k.eval(x, x); };
    quad::QuadratureSpec spec = k.quadrature;
    spec.tol = std::min(spec.tol, 1e-8);
    return quad::integrate_adaptive_complex(diag, k.x_min, k.x_max, spec).real();
}

ContinuousKernel normalized(const ContinuousKernel& k) {
    const double tr = kernel_trace(k);
    if (!(tr > 0.0)) throw std::invalid_argument("kernel trace must be positive");
    ContinuousKernel out = k;
    auto f = k.eval;
    const double scale = 1.0 / tr;
    out.eval = [f, scale](double x, double xp) { return scale * f(x, xp); };
    return out;
}

double kernel_purity_raw(const ContinuousKernel& k) {
    auto f = [&k](double x, double xp) { return std::norm(k.eval(x, xp)); };
    return quad::integrate2d_adaptive(f, k.x_min, k.x_max, k.xp_lo(), k.xp_hi(), k.quadrature);
}

double decoherence_continuous(const ContinuousKernel& k) {
    return 1.0 - kernel_purity_raw(normalized(k));
}

} // namespace decolab::core
