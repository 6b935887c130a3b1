#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "decolab/core.hpp"

using namespace decolab;
using core::Complex;
using core::Matrix;
using core::Vector;

namespace {

std::mt19937_64 rng(12345);

Vector random_state(Eigen::Index n) {
    std::normal_distribution<double> g;
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
    v /= v.norm();
    return v;
}

Matrix random_unitary(Eigen::Index n) {
    std::normal_distribution<double> g;
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ();
}

Matrix random_mixed(Eigen::Index n, int rank) {
    Matrix rho = Matrix::Zero(n, n);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    double total = 0.0;
    for (int r = 0; r < rank; ++r) {
        const double w = u(rng);
        rho += w * core::projector(random_state(n));
        total += w;
    }
    return rho / total;
}

} // namespace

TEST_CASE("validate_density flags the named cases") {
    Matrix mixed = Matrix::Identity(2, 2) / 2.0;
    CHECK(core::validate_density(mixed).valid);

    Matrix bad(2, 2);
    bad << 0.5, 0.6, 0.6, 0.5;
    auto rep = core::validate_density(bad);
    CHECK_FALSE(rep.valid);
    CHECK(rep.min_eigenvalue == doctest::Approx(-0.1).epsilon(1e-12));

    auto proj = core::projector(random_state(5));
    CHECK(core::validate_density(proj).valid);
    CHECK(core::purity(proj) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("purity reference values") {
    CHECK(core::purity(Matrix::Identity(2, 2) / 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.7;
    diag(1, 1) = 0.3;
    CHECK(core::purity(diag) == doctest::Approx(0.58).epsilon(1e-14));
    CHECK_THROWS_AS(core::purity(Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("decoherence_finite limits and values") {
    CHECK(core::decoherence_finite(core::projector(random_state(4))) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(core::decoherence_finite(Matrix::Identity(3, 3) / 3.0) ==
          doctest::Approx(1.0).epsilon(1e-14));
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.7;
    diag(1, 1) = 0.3;
    CHECK(core::decoherence_finite(diag) == doctest::Approx(0.84).epsilon(1e-14));
    CHECK_THROWS_AS(core::decoherence_finite(Matrix::Identity(1, 1)), std::invalid_argument);
}

TEST_CASE("decoherence_finite is the scaled purity deficit and unitary invariant") {
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 2 + trial % 5;
        Matrix rho = random_mixed(n, 3);
        const double nn = static_cast<double>(n);
        CHECK(core::decoherence_finite(rho) ==
              doctest::Approx(nn / (nn - 1.0) * (1.0 - core::purity(rho))).epsilon(1e-13));
        Matrix u = random_unitary(n);
        Matrix rotated = u * rho * u.adjoint();
        CHECK(std::abs(core::decoherence_finite(rotated) - core::decoherence_finite(rho)) <
              1e-12);
    }
}

TEST_CASE("partial trace on the named states") {
    // Bell state.
    core::BipartitePureState bell{2, 2, Vector::Zero(4)};
    bell.amplitudes[0] = 1.0 / std::sqrt(2.0);
    bell.amplitudes[3] = 1.0 / std::sqrt(2.0);
    Matrix rho_a = core::partial_trace(bell, core::Side::a);
    CHECK((rho_a - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(core::concurrence_pure(bell) == doctest::Approx(1.0).epsilon(1e-12));

    // Product state reduces to a pure projector.
    Vector a = random_state(3), b = random_state(4);
    core::BipartitePureState prod{3, 4, Vector(12)};
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) prod.amplitudes[i * 4 + j] = a[i] * b[j];
    CHECK(core::purity(core::partial_trace(prod, core::Side::a)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(core::purity(core::partial_trace(prod, core::Side::b)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(core::concurrence_pure(prod) == doctest::Approx(0.0).epsilon(1e-6));

    // Maximally entangled diagonal state.
    const Eigen::Index n = 5;
    core::BipartitePureState diag{n, n, Vector::Zero(n * n)};
    for (Eigen::Index i = 0; i < n; ++i)
        diag.amplitudes[i * n + i] = 1.0 / std::sqrt(double(n));
    CHECK((core::partial_trace(diag, core::Side::b) - Matrix::Identity(n, n) / double(n))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
}

TEST_CASE("concurrence ties to decoherence of the traced state") {
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index na = 2 + trial % 3, nb = 2 + (trial / 3) % 4;
        core::BipartitePureState psi{na, nb, random_state(na * nb)};
        const double e = core::concurrence_pure(psi);
        CHECK(e * e <= 2.0 + 1e-12); // GEM bound
        const double nn = static_cast<double>(na);
        const double de = core::decoherence_finite(core::partial_trace(psi, core::Side::a));
        CHECK(std::abs(de - nn / (nn - 1.0) * e * e / 2.0) < 1e-12);
    }
}

TEST_CASE("continuous kernel: rank-1 gaussian is pure") {
    core::ContinuousKernel k;
    k.x_min = -8.0;
    k.x_max = 8.0;
    k.eval = [](double x, double xp) {
        const double norm = 1.0 / std::sqrt(std::numbers::pi);
        return Complex(norm * std::exp(-0.5 * (x * x + xp * xp)), 0.0);
    };
    CHECK(core::kernel_trace(k) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(core::decoherence_continuous(k) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("continuous kernel: strong dephasing factor drives the measure to 1") {
    auto make = [](double s) {
        core::ContinuousKernel k;
        k.x_min = -6.0;
        k.x_max = 6.0;
        k.eval = [s](double x, double xp) {
            const double norm = 1.0 / std::sqrt(std::numbers::pi);
            const double d = x - xp;
            return Complex(norm * std::exp(-0.5 * (x * x + xp * xp) - s * d * d), 0.0);
        };
        return k;
    };
    const double weak = core::decoherence_continuous(make(1.0));
    const double strong = core::decoherence_continuous(make(200.0));
    CHECK(weak < strong);
    CHECK(strong > 0.9);
}
