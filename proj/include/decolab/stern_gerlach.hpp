// stern_gerlach.hpp — Hybrid spin (x) position decoherence: block-structured
// measure and a phenomenological two-timescale packet model

#pragma once

#include <vector>

#include "decolab/core.hpp"
#include "decolab/series.hpp"

namespace decolab::sterngerlach {

using core::Complex;
using core::ContinuousKernel;

// 2x2 spin-indexed array of spatial kernels; blocks carry their weights
// (diagonal traces sum to 1, no per-block renormalization).
struct HybridBlockState {
    ContinuousKernel pp; // rho_++
    ContinuousKernel pm; // rho_+-
    ContinuousKernel mp; // rho_-+
    ContinuousKernel mm; // rho_--
};

// Builds rho_-+ as the conjugate transpose of rho_+- with swapped domain.
ContinuousKernel conjugate_block(const ContinuousKernel& pm);

// D_e = 1 - int (|rho_++|^2 + |rho_--|^2) - 2 int |rho_+-|^2, each block
// integrated over its own domain square.
double block_de(const HybridBlockState& state);

struct SGModelParams {
    double epsilon = 1.0;  // field gradient x magnetic moment
    double lambda = 0.0;   // level splitting (pure phase on rho_+-)
    double m = 1.0;
    double sigma = 1.0;    // initial packet width parameter
    double gamma = 0.0;
    double lambda_T = 1.0;
    double hbar = 1.0;
    double weight_up = 0.5; // p; weight_down = 1 - p

    double separation(double t) const;      // d(t) = epsilon t^2 / m
    double decoherence_rate() const;        // Lambda = 4 pi gamma / lambda_T^2
    double tau_fast(double t) const;        // lambda_T^2 / (4 pi gamma d(t)^2)
    double tau_slow() const;                // lambda_T^2 / (16 pi gamma sigma^2)
};

// Gaussian packets at +/- d(t)/2 correlated with |+/->. Diagonal blocks carry
// the position-coupling internal decay exp(-Lambda t (x - x')^2); the
// off-diagonal block carries the integrated fast suppression
// exp(-Lambda epsilon^2 t^5 / (5 m^2)) and the splitting phase.
HybridBlockState two_timescale_state(const SGModelParams& p, double t);

// block_de evaluated over a sorted time grid.
series::DecoherenceSeries de_timeline(const SGModelParams& p,
                                      const std::vector<double>& t_grid);

} // namespace decolab::sterngerlach
