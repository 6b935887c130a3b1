// acceptance_main.cpp — end-to-end acceptance gate: one pass/fail line per
// criterion, non-zero exit when any criterion fails. argv[1] is the path to the
// decolab CLI binary (used by the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "decolab/continuous_models.hpp"
#include "decolab/core.hpp"
#include "decolab/mach_zehnder.hpp"
#include "decolab/pde.hpp"
#include "decolab/scenario.hpp"
#include "decolab/spin_bath.hpp"
#include "decolab/spin_boson.hpp"
#include "decolab/stern_gerlach.hpp"

using namespace decolab;
using core::Complex;
using core::Matrix;
using core::Vector;
using std::numbers::pi;

namespace {

std::mt19937_64 rng(20240817);

Vector random_state(Eigen::Index n) {
    std::normal_distribution<double> g;
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
    return v / v.norm();
}

Matrix random_unitary(Eigen::Index n) {
    std::normal_distribution<double> g;
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    return Eigen::HouseholderQR<Matrix>(a).householderQ();
}

struct Criterion {
    int id;
    std::string label;
    std::function<std::string()> run; // empty string = pass, otherwise reason
};

// ---------------------------------------------------------------- criterion 1
std::string measure_identities() {
    for (int k = 0; k < 1000; ++k) {
        const Eigen::Index n = 2 + k % 7;
        const double de = core::decoherence_finite(core::projector(random_state(n)));
        if (std::abs(de) > 1e-12) return "pure state deviates: " + std::to_string(de);
    }
    for (Eigen::Index n = 2; n <= 8; ++n) {
        const double de =
            core::decoherence_finite(Matrix::Identity(n, n) / static_cast<double>(n));
        if (std::abs(de - 1.0) > 1e-12) return "maximally mixed deviates at n=" + std::to_string(n);
    }
    for (int k = 0; k < 100; ++k) {
        const Eigen::Index n = 2 + k % 5;
        Matrix rho = 0.6 * core::projector(random_state(n)) +
                     0.4 * core::projector(random_state(n));
        const Matrix u = random_unitary(n);
        const double a = core::decoherence_finite(rho);
        const double b = core::decoherence_finite(Matrix(u * rho * u.adjoint()));
        if (std::abs(a - b) > 1e-12) return "unitary invariance violated";
    }
    return "";
}

// ---------------------------------------------------------------- criterion 2
spinbath::SpinBathParams random_product_bath(Eigen::Index n, Eigen::Index spins) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    spinbath::SpinBathParams p;
    p.alpha = random_state(n);
    p.energies = Eigen::VectorXd::NullaryExpr(n, [&](Eigen::Index) { return u(rng); });
    spinbath::ProductEnv env;
    env.amp0.resize(spins);
    env.amp1.resize(spins);
    for (Eigen::Index m = 0; m < spins; ++m) {
        Complex a0(g(rng), g(rng)), a1(g(rng), g(rng));
        const double norm = std::sqrt(std::norm(a0) + std::norm(a1));
        env.amp0[m] = a0 / norm;
        env.amp1[m] = a1 / norm;
    }
    for (int s : {0, 1})
        env.couplings[s] =
            Eigen::MatrixXd::NullaryExpr(n, spins, [&](Eigen::Index, Eigen::Index) { return u(rng); });
    p.env = env;
    return p;
}

std::string spin_bath_oracle() {
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 2 + trial % 3;
        const Eigen::Index spins = 4 + trial % 7; // N <= 10
        auto p = random_product_bath(n, spins);
        for (double t : {0.0, 0.8, 3.1}) {
            const double err = (spinbath::reduced_density(p, t) -
                                spinbath::brute_force_evolve(p, t))
                                   .cwiseAbs()
                                   .maxCoeff();
            if (err > 1e-10)
                return "reduced vs brute force err=" + std::to_string(err);
        }
    }
    // Equal-weight 12-level flat environment: <z> -> 0, <|z|^2> -> 1/12.
    std::uniform_real_distribution<double> u(0.5, 1.5);
    for (int draw = 0; draw < 20; ++draw) {
        spinbath::SpinBathParams p;
        p.alpha = Vector::Constant(2, Complex(1.0 / std::sqrt(2.0), 0.0));
        p.energies = Eigen::VectorXd::Zero(2);
        spinbath::FlatEnv env;
        env.beta = Vector::Constant(12, Complex(1.0 / std::sqrt(12.0), 0.0));
        env.energies = Eigen::VectorXd::Zero(12);
        env.couplings = Eigen::MatrixXd::NullaryExpr(2, 12, [&](Eigen::Index, Eigen::Index) {
            return u(rng);
        });
        p.env = env;
        auto avg = spinbath::time_average_stats(p, 0, 1, 1e4, 8000);
        if (std::abs(avg.mean_z) > 0.05)
            return "|<z>| = " + std::to_string(std::abs(avg.mean_z));
        if (std::abs(avg.mean_abs2 - 1.0 / 12.0) > 0.02)
            return "<|z|^2> = " + std::to_string(avg.mean_abs2);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 3
std::string spin_boson_integrator() {
    spinboson::SpinBosonParams p{1.0, 0.5, {}};
    auto traj = spinboson::integrate_master(p, 4.0, 101);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        const double err =
            (traj.states[i] - spinboson::analytic_rho(p, t)).cwiseAbs().maxCoeff();
        if (err > 1e-6) return "state error " + std::to_string(err);
        const double de = core::decoherence_finite(traj.states[i]);
        if (std::abs(de - (1.0 - std::exp(-4.0 * p.gamma * t))) > 1e-6)
            return "measure error at t=" + std::to_string(t);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 4
std::string plane_wave_checks() {
    // Oracle quadrature at z = 3 against the frozen reference value.
    contmodels::PlaneWaveParams p;
    p.k = 2.0;
    p.L = 1.0;
    const double sigma = 4.5; // z = sqrt(2 sigma) L = 3
    p.lambda_T = std::sqrt(pi / (2.0 * sigma)); // saturation sigma = 2 x target
    p.gamma = std::log(2.0) / 4.0;              // sigma(t = 1) hits the target
    const double oracle3 = contmodels::de_plane_wave_oracle(p, 1.0);
    if (std::abs(oracle3 - 0.7324) > 2e-3)
        return "oracle at z=3: " + std::to_string(oracle3);
    for (double z : {3.0, 4.0, 6.0, 10.0}) {
        const double gap = std::abs(contmodels::de_plane_wave_exact_from_z(z) -
                                    contmodels::de_plane_wave_paper_from_z(z));
        if (gap > 0.03) return "paper/oracle gap " + std::to_string(gap);
    }
    double prev_p = -1.0, prev_o = -1.0;
    for (double z = 0.0; z <= 60.0; z += 0.2) {
        const double dp = contmodels::de_plane_wave_paper_from_z(z);
        const double dox = contmodels::de_plane_wave_exact_from_z(z);
        if (dp < prev_p || dox < prev_o) return "monotonicity broken at z=" + std::to_string(z);
        prev_p = dp;
        prev_o = dox;
    }
    if (contmodels::de_plane_wave_paper_from_z(300.0) < 0.995) return "paper curve not -> 1";
    if (contmodels::de_plane_wave_exact_from_z(300.0) < 0.995) return "oracle curve not -> 1";
    const double naive = 1.0 - std::exp(-1.0);
    const double z_tau = std::sqrt(2.0); // t = tau_D
    if (contmodels::de_plane_wave_paper_from_z(z_tau) >= naive ||
        contmodels::de_plane_wave_exact_from_z(z_tau) >= naive)
        return "not slower than the naive exponential at tau_D";
    return "";
}

// ---------------------------------------------------------------- criterion 5
std::string gaussian_models() {
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int draw = 0; draw < 25; ++draw) {
        contmodels::GaussianMomentumParams pm;
        pm.sigma = u(rng);
        pm.m = u(rng);
        pm.T = u(rng);
        pm.gamma = 0.05 * u(rng);
        const double tm = 0.5 * u(rng);
        const double err_m =
            std::abs(core::decoherence_continuous(contmodels::gaussian_momentum_kernel(pm, tm)) -
                     contmodels::gaussian_momentum_de(pm, tm));
        if (err_m > 1e-6) return "momentum model err=" + std::to_string(err_m);

        contmodels::GaussianPositionParams pp;
        pp.sigma = u(rng);
        pp.m = u(rng);
        pp.T = u(rng);
        pp.gamma = 0.05 * u(rng);
        const double tp = u(rng) * pp.tau_D();
        const double err_p =
            std::abs(core::decoherence_continuous(contmodels::gaussian_position_kernel(pp, tp)) -
                     contmodels::gaussian_position_de(pp, tp));
        if (err_p > 1e-6) return "position model err=" + std::to_string(err_p);
    }
    contmodels::GaussianPositionParams pp;
    pp.gamma = 0.01;
    const double fig2 = contmodels::gaussian_position_de(pp, pp.tau_D());
    if (std::abs(fig2 - (1.0 - 1.0 / std::sqrt(2.0))) > 1e-6)
        return "fig. 2 reference point " + std::to_string(fig2);
    return "";
}

// ---------------------------------------------------------------- criterion 6
std::string pde_oracle() {
    const double s = 1.0, t = 0.5;
    pde::MasterEquationGrid grid;
    grid.n = 256;
    grid.X = 8.0;
    grid.m = 1000.0; // heavy: spreading negligible over the run
    grid.gamma = 1e-3;
    const double kT = 0.25;
    grid.lambda = pde::lambda_from_thermal(grid.m, kT, grid.gamma); // = 0.5
    grid.dt = 0.05;

    core::ContinuousKernel rho0;
    rho0.x_min = -grid.X;
    rho0.x_max = grid.X;
    rho0.eval = [s](double x, double xp) {
        const double norm = 1.0 / std::sqrt(2.0 * pi * s * s);
        return Complex(norm * std::exp(-(x * x + xp * xp) / (4.0 * s * s)), 0.0);
    };
    auto initial = pde::sample(rho0, grid.n, grid.X);
    auto evolved =
        pde::evolve_master_pde(grid, initial, t, pde::CouplingModel::position_coupling);

    // Analytic kernel: initial Gaussian times the dephasing factor.
    const double lam = grid.lambda;
    core::ContinuousKernel ref = rho0;
    auto base = rho0.eval;
    ref.eval = [base, lam, t](double x, double xp) {
        const double r = x - xp;
        return base(x, xp) * std::exp(-lam * t * r * r);
    };
    auto exact = pde::sample(ref, grid.n, grid.X);

    const double l2 = pde::rel_l2(evolved, exact);
    if (l2 > 1e-3) return "L2 distance " + std::to_string(l2);
    if (std::abs(evolved.trace() - 1.0) > 1e-4)
        return "trace drift " + std::to_string(evolved.trace() - 1.0);

    // Fitted off-diagonal decay exponent vs 2 m gamma kB T / hbar^2.
    const int mid = grid.n / 2;
    double num = 0.0, den = 0.0;
    for (int off = 4; off <= 40; off += 4) {
        const double r = grid.h() * off;
        const double ratio = std::abs(evolved.values(mid + off / 2, mid - off + off / 2)) /
                             std::abs(initial.values(mid + off / 2, mid - off + off / 2));
        num += -std::log(ratio) * r * r;
        den += r * r * r * r;
    }
    const double lambda_fit = (num / den) / t;
    const double target = 2.0 * grid.m * grid.gamma * kT;
    if (std::abs(lambda_fit - target) > 0.01 * target)
        return "decay exponent " + std::to_string(lambda_fit) + " vs " + std::to_string(target);
    return "";
}

// ---------------------------------------------------------------- criterion 7
std::string stern_gerlach_checks() {
    for (double p_up : {0.5, 0.7}) {
        sterngerlach::SGModelParams p;
        p.epsilon = 1.0;
        p.m = 1.0;
        p.sigma = 1.0;
        p.gamma = 1e-6 / (4.0 * pi); // Lambda = 1e-6
        p.lambda_T = 1.0;
        p.weight_up = p_up;

        const double plateau =
            sterngerlach::block_de(sterngerlach::two_timescale_state(p, 30.0));
        if (std::abs(plateau - 2.0 * p_up * (1.0 - p_up)) > 0.02)
            return "plateau " + std::to_string(plateau) + " at p=" + std::to_string(p_up);

        std::vector<double> grid;
        for (int i = 0; i <= 40; ++i) grid.push_back(i * 0.75);
        auto series = sterngerlach::de_timeline(p, grid);
        double prev = -1.0;
        for (const auto& row : series.rows) {
            if (row[2] < prev - 1e-9) return "timeline not monotone";
            prev = row[2];
        }

        sterngerlach::SGModelParams wide = p;
        wide.sigma = 100.0;
        const double late = sterngerlach::block_de(
            sterngerlach::two_timescale_state(wide, 5e3 * wide.tau_slow()));
        if (late < 0.99) return "final measure " + std::to_string(late);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 8
std::string mach_zehnder_checks() {
    using namespace machzehnder;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const double r11 = u(rng);
        const double c = u(rng) * std::sqrt(r11 * (1.0 - r11));
        const double theta = 2.0 * pi * u(rng);
        TwoPathDensity rho(r11, 1.0 - r11, c, theta);
        MeasurementConfig lower{Blocker::block_lower, 0.0, 0, 0};
        MeasurementConfig upper{Blocker::block_upper, 0.0, 0, 0};
        // Fringe evaluated at the known intrinsic phase: I_diff = 2c exactly.
        MeasurementConfig open{Blocker::both_open, theta, 0, 0};
        const auto peak = intensities(rho, open);
        const auto rep = estimate_de(intensities(rho, lower), intensities(rho, upper),
                                     peak.i_d1 - peak.i_d2, 1e-9);
        if (std::abs(rep.raw - rho.de()) > 1e-12)
            return "estimator identity off by " + std::to_string(rep.raw - rho.de());
    }

    TwoPathDensity target(0.5, 0.5, 0.25, 0.8);
    auto sum = monte_carlo_protocol(target, 1000000, 200, 4242);
    if (std::abs(sum.mean - 0.75) > 0.005)
        return "shot-noise mean " + std::to_string(sum.mean);

    spinboson::SpinBosonParams sb{1.0, 0.5, {}};
    for (double t : {0.0, 0.3, 1.0, 2.5}) {
        const double mz = coherence_from_dephasing(sb.gamma, t, sb.omega_s).de();
        if (std::abs(mz - spinboson::de_analytic(sb, t)) > 1e-12)
            return "cross-module identity broken at t=" + std::to_string(t);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 9
std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return {};
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::string cli_determinism(const std::string& cli) {
    for (int fig : {1, 2}) {
        const std::string a = "acceptance_fig" + std::to_string(fig) + "_a.csv";
        const std::string b = "acceptance_fig" + std::to_string(fig) + "_b.csv";
        for (const std::string& out : {a, b}) {
            const std::string cmd =
                "\"" + cli + "\" figures " + std::to_string(fig) + " --out " + out;
            if (std::system(cmd.c_str()) != 0)
                return "figures " + std::to_string(fig) + " exited non-zero";
        }
        const std::string ca = read_file(a), cb = read_file(b);
        if (ca.empty() || ca != cb)
            return "figure " + std::to_string(fig) + " output not byte-identical";
    }
    // A seeded sampling scenario must also reproduce byte-for-byte.
    const std::string cfg_path = "acceptance_mz.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "[machzehnder]\ngamma = 0.25\nomega_s = 1.0\nshots = 100000\n"
               "t_min = 0\nt_max = 2\npoints = 9\nseed = 11\n";
    }
    for (const char* out : {"acceptance_mz_a.csv", "acceptance_mz_b.csv"}) {
        const std::string cmd = "\"" + cli + "\" run " + cfg_path + " --out " + out + " --quiet";
        if (std::system(cmd.c_str()) != 0) return "run exited non-zero";
    }
    if (read_file("acceptance_mz_a.csv").empty() ||
        read_file("acceptance_mz_a.csv") != read_file("acceptance_mz_b.csv"))
        return "seeded run output not byte-identical";
    return "";
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: decolab_acceptance <path-to-decolab-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    const std::vector<Criterion> criteria = {
        {1, "measure identities (pure / mixed / unitary invariance)", measure_identities},
        {2, "spin bath: oracle match and 1/N time averages", spin_bath_oracle},
        {3, "spin boson: integrator vs closed form", spin_boson_integrator},
        {4, "plane wave: oracle value, gap, monotonicity, tau_D ordering", plane_wave_checks},
        {5, "gaussian models: quadrature vs closed forms, fig. 2 point", gaussian_models},
        {6, "pde oracle: L2 match, trace drift, decay exponent", pde_oracle},
        {7, "stern-gerlach: plateau, monotone timeline, final value", stern_gerlach_checks},
        {8, "mach-zehnder: estimator identity, shot noise, cross-module", mach_zehnder_checks},
        {9, "cli: byte-identical figure and seeded-run regeneration",
         [&cli] { return cli_determinism(cli); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string reason;
        const auto start = std::chrono::steady_clock::now();
        try {
            reason = c.run();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char line[512];
        if (reason.empty()) {
            std::snprintf(line, sizeof(line), "PASS  %d  %s  (%.1fs)", c.id, c.label.c_str(),
                          secs);
        } else {
            std::snprintf(line, sizeof(line), "FAIL  %d  %s  (%.1fs): %s", c.id,
                          c.label.c_str(), secs, reason.c_str());
            ++failures;
        }
        std::cout << line << "\n";
    }
    if (failures > 0) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
