#include "decolab/spin_bath.hpp"

#include <cmath>
#include <stdexcept>

namespace decolab::spinbath {

namespace {
constexpr Eigen::Index kMaxFlatLevels = Eigen::Index(1) << 14;

const FlatEnv* as_flat(const SpinBathParams& p) { return std::get_if<FlatEnv>(&p.env); }
const ProductEnv* as_product(const SpinBathParams& p) { return std::get_if<ProductEnv>(&p.env); }
} // namespace

void validate(const SpinBathParams& p) {
    core::require_normalized(p.alpha);
    const auto n = p.levels();
    if (p.energies.size() != n)
        throw std::invalid_argument("spin bath: energies size must equal level count");
    if (const auto* f = as_flat(p)) {
        core::require_normalized(f->beta);
        if (f->energies.size() != f->beta.size() || f->couplings.rows() != n ||
            f->couplings.cols() != f->beta.size())
            throw std::invalid_argument("spin bath: flat environment shape mismatch");
    } else {
        const auto* e = as_product(p);
        const auto N = e->amp0.size();
        if (N < 1 || e->amp1.size() != N)
            throw std::invalid_argument("spin bath: product environment needs >= 1 spin");
        for (Eigen::Index m = 0; m < N; ++m) {
            const double norm = std::norm(e->amp0[m]) + std::norm(e->amp1[m]);
            if (std::abs(norm - 1.0) > 1e-10)
                throw std::invalid_argument("spin bath: per-spin amplitudes not normalized");
        }
        for (int s : {0, 1})
            if (e->couplings[s].rows() != n || e->couplings[s].cols() != N)
                throw std::invalid_argument("spin bath: product couplings shape mismatch");
    }
}

ProductEnv make_zurek_env(Eigen::Index n_levels, const Eigen::VectorXd& g) {
    const auto N = g.size();
    ProductEnv env;
    env.amp0 = Vector::Constant(N, Complex(1.0 / std::sqrt(2.0), 0.0));
    env.amp1 = env.amp0;
    env.couplings[0].resize(n_levels, N);
    env.couplings[1].resize(n_levels, N);
    for (Eigen::Index j = 0; j < n_levels; ++j) {
        const double sj = (j % 2 == 0) ? 1.0 : -1.0;
        for (Eigen::Index m = 0; m < N; ++m) {
            env.couplings[0](j, m) = sj * g[m];
            env.couplings[1](j, m) = -sj * g[m];
        }
    }
    return env;
}

FlatEnv flatten(const ProductEnv& env, Eigen::Index n_levels) {
    const auto N = env.amp0.size();
    if (N > 14) throw std::invalid_argument("flatten: more than 14 spins");
    const Eigen::Index K = Eigen::Index(1) << N;
    FlatEnv flat;
    flat.beta.resize(K);
    flat.energies = Eigen::VectorXd::Zero(K);
    flat.couplings.resize(n_levels, K);
    for (Eigen::Index k = 0; k < K; ++k) {
        Complex amp(1.0, 0.0);
        for (Eigen::Index m = 0; m < N; ++m)
            amp *= ((k >> m) & 1) ? env.amp1[m] : env.amp0[m];
        flat.beta[k] = amp;
        for (Eigen::Index j = 0; j < n_levels; ++j) {
            double g = 0.0;
            for (Eigen::Index m = 0; m < N; ++m)
                g += env.couplings[(k >> m) & 1](j, m);
            flat.couplings(j, k) = g;
        }
    }
    return flat;
}

Complex z_factor(const SpinBathParams& p, Eigen::Index i, Eigen::Index j, double t) {
    if (i < 0 || j < 0 || i >= p.levels() || j >= p.levels())
        throw std::out_of_range("z_factor: level index out of range");
    const Complex im(0.0, 1.0);
    if (const auto* f = as_flat(p)) {
        Complex z{};
        for (Eigen::Index k = 0; k < f->beta.size(); ++k)
            z += std::norm(f->beta[k]) *
                 std::exp(-im * t * (f->couplings(i, k) - f->couplings(j, k)));
        return z;
    }
    const auto* e = as_product(p);
    Complex z(1.0, 0.0);
    for (Eigen::Index m = 0; m < e->amp0.size(); ++m) {
        const double d0 = e->couplings[0](i, m) - e->couplings[0](j, m);
        const double d1 = e->couplings[1](i, m) - e->couplings[1](j, m);
        z *= std::norm(e->amp0[m]) * std::exp(-im * t * d0) +
             std::norm(e->amp1[m]) * std::exp(-im * t * d1);
    }
    return z;
}

Matrix reduced_density(const SpinBathParams& p, double t) {
    validate(p);
    const auto n = p.levels();
    const Complex im(0.0, 1.0);
    Matrix rho(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        rho(i, i) = std::norm(p.alpha[i]);
        for (Eigen::Index j = 0; j < i; ++j) {
            Complex v = p.alpha[i] * std::conj(p.alpha[j]) *
                        std::exp(-im * t * (p.energies[i] - p.energies[j])) *
                        z_factor(p, i, j, t);
            rho(i, j) = v;
            rho(j, i) = std::conj(v);
        }
    }
    return rho;
}

Matrix brute_force_evolve(const SpinBathParams& p, double t) {
    validate(p);
    const auto n = p.levels();
    const FlatEnv flat = as_flat(p) ? *as_flat(p) : flatten(*as_product(p), n);
    const auto K = flat.beta.size();
    if (K > kMaxFlatLevels) throw std::invalid_argument("brute force: environment too large");

    // |Psi(t)> = sum_{j,k} alpha_j beta_k exp(-i t (eps_j + E_k + gamma_jk)) |j>|k>
    const Complex im(0.0, 1.0);
    Matrix psi(n, K);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < K; ++k)
            psi(j, k) = p.alpha[j] * flat.beta[k] *
                        std::exp(-im * t * (p.energies[j] + flat.energies[k] +
                                            flat.couplings(j, k)));
    return psi * psi.adjoint();
}

TimeAverage time_average_stats(const SpinBathParams& p, Eigen::Index i, Eigen::Index j,
                               double T, int n_samples) {
    if (n_samples < 2) throw std::invalid_argument("time average: need >= 2 samples");
    TimeAverage avg;
    for (int s = 0; s < n_samples; ++s) {
        const double t = T * static_cast<double>(s) / (n_samples - 1);
        const Complex z = z_factor(p, i, j, t);
        avg.mean_z += z;
        avg.mean_abs2 += std::norm(z);
    }
    avg.mean_z /= static_cast<double>(n_samples);
    avg.mean_abs2 /= static_cast<double>(n_samples);
    return avg;
}

double effective_env_levels(const SpinBathParams& p) {
    double inv = 0.0;
    if (const auto* f = as_flat(p)) {
        for (Eigen::Index k = 0; k < f->beta.size(); ++k) {
            const double w = std::norm(f->beta[k]);
            inv += w * w;
        }
    } else {
        const auto* e = as_product(p);
        inv = 1.0;
        for (Eigen::Index m = 0; m < e->amp0.size(); ++m) {
            const double w0 = std::norm(e->amp0[m]);
            const double w1 = std::norm(e->amp1[m]);
            inv *= w0 * w0 + w1 * w1;
        }
    }
    return 1.0 / inv;
}

double asymptotic_de(const SpinBathParams& p) {
    validate(p);
    const auto n = p.levels();
    if (n < 2) throw std::invalid_argument("asymptotic_de: need >= 2 levels");
    const double n_eff = effective_env_levels(p);
    double sum4 = 0.0, cross = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double wi = std::norm(p.alpha[i]);
        sum4 += wi * wi;
        for (Eigen::Index j = 0; j < n; ++j)
            if (i != j) cross += wi * std::norm(p.alpha[j]);
    }
    const double nn = static_cast<double>(n);
    return nn / (nn - 1.0) * (1.0 - sum4 - cross / n_eff);
}

} // namespace decolab::spinbath
