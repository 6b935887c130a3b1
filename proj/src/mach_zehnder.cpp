#include "decolab/mach_zehnder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace decolab::machzehnder {

using std::numbers::pi;

TwoPathDensity::TwoPathDensity(double r11, double r22, double c, double th)
    : rho11(r11), rho22(r22), coherence(c), theta(th) {
    if (rho11 < 0.0 || rho22 < 0.0 || std::abs(rho11 + rho22 - 1.0) > 1e-12)
        throw std::invalid_argument("two-path density: populations must sum to 1");
    if (coherence < 0.0)
        throw std::invalid_argument("two-path density: coherence must be >= 0");
    if (coherence > std::sqrt(rho11 * rho22) + 1e-12)
        throw std::invalid_argument("two-path density: coherence exceeds sqrt(rho11 rho22)");
}

double TwoPathDensity::de() const {
    return 2.0 * (1.0 - rho11 * rho11 - rho22 * rho22 - 2.0 * coherence * coherence);
}

namespace {

IntensityRecord exact_intensities(const TwoPathDensity& rho, const MeasurementConfig& cfg) {
    IntensityRecord rec;
    rec.config = cfg;
    switch (cfg.blocker) {
    case Blocker::both_open: {
        const double fringe = 2.0 * rho.coherence * std::cos(cfg.phase - rho.theta);
        rec.i_d1 = 0.5 * (1.0 + fringe);
        rec.i_d2 = 0.5 * (1.0 - fringe);
        break;
    }
    case Blocker::block_lower:
        rec.i_d1 = rec.i_d2 = rho.rho11 / 2.0;
        break;
    case Blocker::block_upper:
        rec.i_d1 = rec.i_d2 = rho.rho22 / 2.0;
        break;
    }
    return rec;
}

std::uint64_t draw_binomial(std::mt19937_64& rng, std::uint64_t n, double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return n;
    std::binomial_distribution<std::uint64_t> dist(n, p);
    return dist(rng);
}

} // namespace

IntensityRecord intensities(const TwoPathDensity& rho, const MeasurementConfig& cfg) {
    if (cfg.shots == 0) return exact_intensities(rho, cfg);
    std::mt19937_64 rng(cfg.seed);
    return intensities(rho, cfg, rng);
}

IntensityRecord intensities(const TwoPathDensity& rho, const MeasurementConfig& cfg,
                            std::mt19937_64& rng) {
    IntensityRecord rec = exact_intensities(rho, cfg);
    if (cfg.shots == 0) return rec;
    // Per-quanton categorical outcome {D1, D2, absorbed}; absorbed mass is the
    // blocked path's flux. Sampled as two nested binomials.
    const double p1 = rec.i_d1;
    const double p2 = rec.i_d2;
    const std::uint64_t n = cfg.shots;
    const std::uint64_t n1 = draw_binomial(rng, n, p1);
    const double p2_given = p2 / std::max(1.0 - p1, 1e-300);
    const std::uint64_t n2 = draw_binomial(rng, n - n1, std::min(p2_given, 1.0));
    rec.i_d1 = static_cast<double>(n1) / static_cast<double>(n);
    rec.i_d2 = static_cast<double>(n2) / static_cast<double>(n);
    return rec;
}

EstimateReport estimate_de(const IntensityRecord& block_lower,
                           const IntensityRecord& block_upper, double i_diff_max,
                           double norm_tol, double validity_delta) {
    if (block_lower.config.blocker != Blocker::block_lower ||
        block_upper.config.blocker != Blocker::block_upper)
        throw std::invalid_argument("estimate_de: records must come from matching blocked runs");
    EstimateReport rep;
    rep.i_av1 = block_lower.i_d1 + block_lower.i_d2;
    rep.i_av2 = block_upper.i_d1 + block_upper.i_d2;
    rep.i_diff_max = i_diff_max;
    if (std::abs(rep.i_av1 + rep.i_av2 - 1.0) > norm_tol)
        throw std::runtime_error("estimate_de: blocked-path intensities do not sum to 1 "
                                 "(flux loss or miscalibration)");
    rep.raw = 2.0 * (1.0 - rep.i_av1 * rep.i_av1 - rep.i_av2 * rep.i_av2 -
                     0.5 * i_diff_max * i_diff_max);
    rep.clamped = std::clamp(rep.raw, 0.0, 1.0);
    rep.valid = rep.raw >= -validity_delta && rep.raw <= 1.0 + validity_delta;
    return rep;
}

PhaseScanResult phase_scan(const TwoPathDensity& rho, int n_phases, std::uint64_t shots,
                           std::mt19937_64* rng) {
    if (n_phases < 4) throw std::invalid_argument("phase_scan: need >= 4 phases");
    std::mt19937_64 local(0);
    if (shots > 0 && rng == nullptr) rng = &local;

    std::vector<double> diff(n_phases);
    const double step = 2.0 * pi / n_phases;
    for (int i = 0; i < n_phases; ++i) {
        MeasurementConfig cfg;
        cfg.blocker = Blocker::both_open;
        cfg.phase = i * step;
        cfg.shots = shots;
        const IntensityRecord rec =
            shots > 0 ? intensities(rho, cfg, *rng) : intensities(rho, cfg);
        diff[i] = rec.i_d1 - rec.i_d2;
    }

    int best = 0;
    for (int i = 1; i < n_phases; ++i)
        if (diff[i] * diff[i] > diff[best] * diff[best]) best = i;

    // Parabolic refinement of I_diff^2 through the winner and its neighbors
    // (periodic grid).
    const double ym = diff[(best + n_phases - 1) % n_phases] *
                      diff[(best + n_phases - 1) % n_phases];
    const double y0 = diff[best] * diff[best];
    const double yp = diff[(best + 1) % n_phases] * diff[(best + 1) % n_phases];
    double offset = 0.0;
    const double denom = ym - 2.0 * y0 + yp;
    if (std::abs(denom) > 1e-300) offset = 0.5 * (ym - yp) / denom;
    offset = std::clamp(offset, -0.5, 0.5);

    PhaseScanResult res;
    res.phi_star = std::fmod(best * step + offset * step + 2.0 * pi, 2.0 * pi);
    if (shots == 0) {
        // Exact limit: evaluate the fringe at the refined phase.
        MeasurementConfig cfg{Blocker::both_open, res.phi_star, 0, 0};
        const IntensityRecord rec = intensities(rho, cfg);
        res.i_diff_max = std::abs(rec.i_d1 - rec.i_d2);
    } else {
        const double y_ref = y0 - 0.25 * (ym - yp) * offset;
        res.i_diff_max = std::sqrt(std::max(0.0, y_ref));
    }
    const double noise_floor = shots == 0 ? 1e-12 : 4.0 / std::sqrt(double(shots));
    res.zero_amplitude = res.i_diff_max <= noise_floor;
    return res;
}

ProtocolSummary monte_carlo_protocol(const TwoPathDensity& rho, std::uint64_t shots,
                                     int trials, std::uint64_t seed, int n_phases) {
    if (trials < 1) throw std::invalid_argument("monte_carlo_protocol: trials must be >= 1");
    ProtocolSummary sum;
    sum.estimates.reserve(trials);
    for (int trial = 0; trial < trials; ++trial) {
        // Split streams: one generator per trial, seeded independently.
        std::seed_seq seq{seed, static_cast<std::uint64_t>(trial)};
        std::mt19937_64 rng(seq);

        MeasurementConfig lower{Blocker::block_lower, 0.0, shots, 0};
        MeasurementConfig upper{Blocker::block_upper, 0.0, shots, 0};
        const IntensityRecord rec_lower =
            shots > 0 ? intensities(rho, lower, rng) : intensities(rho, lower);
        const IntensityRecord rec_upper =
            shots > 0 ? intensities(rho, upper, rng) : intensities(rho, upper);
        const PhaseScanResult scan = phase_scan(rho, n_phases, shots, &rng);
        const double norm_tol = shots == 0 ? 1e-9 : 8.0 / std::sqrt(double(shots));
        const EstimateReport rep =
            estimate_de(rec_lower, rec_upper, scan.i_diff_max, norm_tol);
        sum.estimates.push_back(rep.raw);
    }

    const double n = static_cast<double>(sum.estimates.size());
    double mean = 0.0;
    for (double e : sum.estimates) mean += e;
    mean /= n;
    double var = 0.0;
    for (double e : sum.estimates) var += (e - mean) * (e - mean);
    sum.mean = mean;
    sum.stddev = n > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;

    std::vector<double> sorted = sum.estimates;
    std::sort(sorted.begin(), sorted.end());
    auto quantile = [&sorted](double q) {
        const double pos = q * (sorted.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        const double f = pos - lo;
        return (1.0 - f) * sorted[lo] + f * sorted[hi];
    };
    sum.q025 = quantile(0.025);
    sum.q975 = quantile(0.975);
    return sum;
}

TwoPathDensity coherence_from_dephasing(double gamma, double t, double omega_s) {
    if (gamma < 0.0) throw std::invalid_argument("coherence_from_dephasing: gamma must be >= 0");
    return TwoPathDensity(0.5, 0.5, 0.5 * std::exp(-2.0 * gamma * t), omega_s * t);
}

} // namespace decolab::machzehnder
