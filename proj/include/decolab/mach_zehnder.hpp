// mach_zehnder.hpp — Blocked-path interferometric estimation of the
// decoherence measure, with shot-noise Monte Carlo

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace decolab::machzehnder {

// Effective two-path state: populations, coherence magnitude and intrinsic phase.
// Construction rejects unphysical inputs (c > sqrt(rho11 rho22)).
struct TwoPathDensity {
    TwoPathDensity(double rho11, double rho22, double coherence, double theta);

    double rho11;
    double rho22;
    double coherence; // |rho12|
    double theta;     // phase of rho12

    double de() const; // 2 (1 - rho11^2 - rho22^2 - 2 c^2)
};

enum class Blocker { both_open, block_upper, block_lower };

// shots == 0 means the infinite-shot (exact probability) limit.
struct MeasurementConfig {
    Blocker blocker = Blocker::both_open;
    double phase = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

struct IntensityRecord {
    double i_d1 = 0.0; // counts normalized by source count
    double i_d2 = 0.0;
    MeasurementConfig config;
};

IntensityRecord intensities(const TwoPathDensity& rho, const MeasurementConfig& cfg);
IntensityRecord intensities(const TwoPathDensity& rho, const MeasurementConfig& cfg,
                            std::mt19937_64& rng);

struct EstimateReport {
    double raw = 0.0;
    double clamped = 0.0; // raw clipped to [0, 1]
    bool valid = true;    // false when raw falls outside [-delta, 1 + delta]
    double i_av1 = 0.0;
    double i_av2 = 0.0;
    double i_diff_max = 0.0;
};

// D_e estimator 2 [1 - I_av1^2 - I_av2^2 - (1/2) I_diff_max^2]. I_av for a
// blocked configuration is the sum of the two detector intensities. Throws
// std::runtime_error when I_av1 + I_av2 strays from 1 beyond norm_tol
// (flux loss / miscalibration).
EstimateReport estimate_de(const IntensityRecord& block_lower,
                           const IntensityRecord& block_upper, double i_diff_max,
                           double norm_tol = 1e-6, double validity_delta = 0.05);

struct PhaseScanResult {
    double phi_star = 0.0;
    double i_diff_max = 0.0;
    bool zero_amplitude = false; // fringe amplitude indistinguishable from 0
};

// Scans phi over [0, 2 pi), maximizing I_diff^2 with parabolic refinement
// around the grid maximum. At infinite shots I_diff_max = 2c.
PhaseScanResult phase_scan(const TwoPathDensity& rho, int n_phases, std::uint64_t shots,
                           std::mt19937_64* rng = nullptr);

struct ProtocolSummary {
    double mean = 0.0;
    double stddev = 0.0;
    double q025 = 0.0; // empirical 95% interval bounds
    double q975 = 0.0;
    std::vector<double> estimates;
};

// Repeats the full protocol (two blocked runs + phase scan) `trials` times at
// the given shot count; deterministic for a fixed seed.
ProtocolSummary monte_carlo_protocol(const TwoPathDensity& rho, std::uint64_t shots,
                                     int trials, std::uint64_t seed, int n_phases = 64);

// Equal-weight state fed by pure dephasing: c = (1/2) exp(-2 gamma t),
// theta = omega_s t. Its estimator value equals 1 - exp(-4 gamma t).
TwoPathDensity coherence_from_dephasing(double gamma, double t, double omega_s = 0.0);

} // namespace decolab::machzehnder
