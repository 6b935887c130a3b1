// spin_bath.hpp — n-level system dephased by a diagonal environment:
// coherence factors, exact reduced dynamics, brute-force oracle, time averages

#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "decolab/core.hpp"

namespace decolab::spinbath {

using core::Complex;
using core::Matrix;
using core::Vector;

// Environment given as a flat list of K levels with amplitudes beta_k,
// energies E_k and couplings gamma_jk to each system level j.
struct FlatEnv {
    Vector beta;               // K amplitudes, sum |beta|^2 = 1
    Eigen::VectorXd energies;  // K
    Eigen::MatrixXd couplings; // n x K, gamma_jk
};

// Environment of N independent spin-1/2 entities. Spin m starts in
// amp0[m] |0> + amp1[m] |1>; coupling of system level j to spin m in state s
// is couplings[s](j, m).
struct ProductEnv {
    Vector amp0; // N
    Vector amp1; // N
    std::array<Eigen::MatrixXd, 2> couplings; // each n x N
};

struct SpinBathParams {
    Vector alpha;             // n system amplitudes, sum |alpha|^2 = 1
    Eigen::VectorXd energies; // n system energies epsilon_j
    std::variant<FlatEnv, ProductEnv> env;

    Eigen::Index levels() const { return alpha.size(); }
};

void validate(const SpinBathParams& p);

// Zurek-style qubit environment: couplings +/- g_m depending on system level
// and spin state, each spin in an equal superposition.
ProductEnv make_zurek_env(Eigen::Index n_levels, const Eigen::VectorXd& g);

// Expands a product environment into the equivalent flat 2^N-level one.
// Throws if N > 14.
FlatEnv flatten(const ProductEnv& env, Eigen::Index n_levels);

// Coherence factor z_ij(t) = sum_k |beta_k|^2 exp(-i t (gamma_ik - gamma_jk)),
// evaluated as a direct sum (flat) or a product over spins (product env).
Complex z_factor(const SpinBathParams& p, Eigen::Index i, Eigen::Index j, double t);

// Exact reduced density matrix: rho_ii = |alpha_i|^2,
// rho_ij = alpha_i alpha_j^* exp(-i t (eps_i - eps_j)) z_ij(t).
Matrix reduced_density(const SpinBathParams& p, double t);

// Independent oracle: evolves the full system x environment product state under
// diagonal phases exp(-i t (eps_j + E_k + gamma_jk)) and partial-traces the
// environment. Caps at K = 2^14 flat levels.
Matrix brute_force_evolve(const SpinBathParams& p, double t);

struct TimeAverage {
    Complex mean_z{};
    double mean_abs2 = 0.0;
};

// Uniform-grid time average of z_ij and |z_ij|^2 over [0, T].
TimeAverage time_average_stats(const SpinBathParams& p, Eigen::Index i, Eigen::Index j,
                               double T, int n_samples);

// Effective number of environment levels 1 / <|z|^2>_inf: the inverse of
// sum_k |beta_k|^4 (flat) or prod_m (|amp0_m|^4 + |amp1_m|^4) (product).
double effective_env_levels(const SpinBathParams& p);

// Long-time decoherence plateau
// (n/(n-1)) [1 - sum |alpha_i|^4 - (1/N_eff) sum_{i != j} |alpha_i|^2 |alpha_j|^2].
double asymptotic_de(const SpinBathParams& p);

} // namespace decolab::spinbath
