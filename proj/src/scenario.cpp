#include "decolab/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "decolab/continuous_models.hpp"
#include "decolab/core.hpp"
#include "decolab/mach_zehnder.hpp"
#include "decolab/spin_bath.hpp"
#include "decolab/spin_boson.hpp"
#include "decolab/stern_gerlach.hpp"

namespace decolab::scenario {

namespace {

const std::set<std::string> kScenarios = {
    "spinbath",        "spinboson",        "freeparticle-planewave",
    "freeparticle-gauss-momentum", "freeparticle-gauss-position",
    "sterngerlach",    "machzehnder"};

const std::set<std::string> kCommonKeys = {"t_min", "t_max", "points", "grid", "seed"};

std::map<std::string, std::set<std::string>> scenario_keys() {
    return {
        {"spinbath", {"levels", "env", "env_levels", "coupling_min", "coupling_max"}},
        {"spinboson", {"gamma", "omega_s"}},
        {"freeparticle-planewave", {"k", "half_width", "lambda_t", "gamma"}},
        {"freeparticle-gauss-momentum", {"sigma", "mass", "temperature", "gamma"}},
        {"freeparticle-gauss-position", {"sigma", "mass", "temperature", "gamma"}},
        {"sterngerlach",
         {"epsilon", "splitting", "mass", "sigma", "gamma", "lambda_t", "weight_up"}},
        {"machzehnder", {"gamma", "omega_s", "shots"}},
    };
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double require_param(const ScenarioConfig& c, const std::string& key) {
    auto it = c.params.find(key);
    if (it == c.params.end()) throw ConfigError("missing key '" + key + "'");
    return it->second;
}

double param_or(const ScenarioConfig& c, const std::string& key, double fallback) {
    auto it = c.params.find(key);
    return it == c.params.end() ? fallback : it->second;
}

} // namespace

ScenarioConfig parse_config_text(const std::string& text) {
    ScenarioConfig cfg;
    std::map<std::string, std::string> raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            if (!cfg.name.empty())
                throw ConfigError("multiple [scenario] sections are not supported");
            cfg.name = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (cfg.name.empty()) throw ConfigError("key before [scenario] header: " + key);
        if (raw.count(key)) throw ConfigError("duplicate key '" + key + "'");
        raw[key] = value;
    }
    if (cfg.name.empty()) throw ConfigError("no [scenario] section found");
    if (!kScenarios.count(cfg.name)) throw ConfigError("unknown scenario '" + cfg.name + "'");

    const auto allowed = scenario_keys().at(cfg.name);
    for (const auto& [key, value] : raw) {
        if (!allowed.count(key) && !kCommonKeys.count(key))
            throw ConfigError("unknown key '" + key + "' for scenario " + cfg.name);
        if (key == "grid") {
            if (value == "linear") cfg.grid.log_spaced = false;
            else if (value == "log") cfg.grid.log_spaced = true;
            else throw ConfigError("grid must be 'linear' or 'log'");
            continue;
        }
        if (key == "env") {
            if (value == "flat") cfg.params["env"] = 0.0;
            else if (value == "product") cfg.params["env"] = 1.0;
            else throw ConfigError("env must be 'flat' or 'product'");
            continue;
        }
        double num = 0.0;
        try {
            std::size_t pos = 0;
            num = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ConfigError("key '" + key + "': cannot parse value '" + value + "'");
        }
        if (key == "t_min") cfg.grid.t_min = num;
        else if (key == "t_max") cfg.grid.t_max = num;
        else if (key == "points") cfg.grid.points = static_cast<int>(num);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(num);
        else cfg.params[key] = num;
    }
    for (const auto& key : allowed)
        if (!cfg.params.count(key)) throw ConfigError("missing key '" + key + "'");
    if (cfg.grid.points < 2 || cfg.grid.t_max <= cfg.grid.t_min)
        throw ConfigError("invalid time grid");
    return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str());
}

namespace {

std::vector<double> grid_of(const ScenarioConfig& c) {
    return series::time_grid(c.grid.t_min, c.grid.t_max, c.grid.points, c.grid.log_spaced);
}

series::DecoherenceSeries run_spinbath(const ScenarioConfig& c) {
    using namespace spinbath;
    const auto n = static_cast<Eigen::Index>(require_param(c, "levels"));
    const auto env_levels = static_cast<Eigen::Index>(require_param(c, "env_levels"));
    const double g_lo = require_param(c, "coupling_min");
    const double g_hi = require_param(c, "coupling_max");
    const int env_kind = static_cast<int>(require_param(c, "env")); // 0 flat, 1 product
    if (n < 2 || env_levels < 1) throw ConfigError("spinbath: levels >= 2, env_levels >= 1");

    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> dist(g_lo, g_hi);

    SpinBathParams p;
    p.alpha = core::Vector::Constant(n, core::Complex(1.0 / std::sqrt(double(n)), 0.0));
    p.energies = Eigen::VectorXd::Zero(n);
    if (env_kind == 0) {
        FlatEnv env;
        env.beta = core::Vector::Constant(
            env_levels, core::Complex(1.0 / std::sqrt(double(env_levels)), 0.0));
        env.energies = Eigen::VectorXd::Zero(env_levels);
        env.couplings.resize(n, env_levels);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < env_levels; ++k) env.couplings(j, k) = dist(rng);
        p.env = env;
    } else {
        Eigen::VectorXd g(env_levels);
        for (Eigen::Index m = 0; m < env_levels; ++m) g[m] = dist(rng);
        p.env = make_zurek_env(n, g);
    }

    series::DecoherenceSeries s;
    s.columns = {"t", "de_analytic", "de_numeric", "abs_z01"};
    const double nn = static_cast<double>(n);
    for (double t : grid_of(c)) {
        double sum4 = 0.0, cross = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double wi = std::norm(p.alpha[i]);
            sum4 += wi * wi;
            for (Eigen::Index j = 0; j < n; ++j)
                if (i != j)
                    cross += wi * std::norm(p.alpha[j]) * std::norm(z_factor(p, i, j, t));
        }
        const double analytic = nn / (nn - 1.0) * (1.0 - sum4 - cross);
        const double numeric = core::decoherence_finite(reduced_density(p, t));
        s.add_row({t, analytic, numeric, std::abs(z_factor(p, 0, 1, t))});
    }
    return s;
}

series::DecoherenceSeries run_spinboson(const ScenarioConfig& c) {
    spinboson::SpinBosonParams p;
    p.gamma = require_param(c, "gamma");
    p.omega_s = require_param(c, "omega_s");
    const auto grid = grid_of(c);
    const auto traj = spinboson::integrate_master(p, grid);
    series::DecoherenceSeries s;
    s.columns = {"t", "de_analytic", "de_numeric", "abs_rho01"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        s.add_row({grid[i], spinboson::de_analytic(p, grid[i]),
                   core::decoherence_finite(traj.states[i]),
                   std::abs(traj.states[i](0, 1))});
    }
    return s;
}

series::DecoherenceSeries run_planewave(const ScenarioConfig& c) {
    contmodels::PlaneWaveParams p;
    p.k = require_param(c, "k");
    p.L = require_param(c, "half_width");
    p.lambda_T = require_param(c, "lambda_t");
    p.gamma = require_param(c, "gamma");
    series::DecoherenceSeries s;
    s.columns = {"t", "de_paper", "de_oracle", "sigma"};
    for (double t : grid_of(c))
        s.add_row({t, contmodels::de_plane_wave_paper(p, t),
                   contmodels::de_plane_wave_oracle(p, t), contmodels::sigma_of_t(p, t)});
    return s;
}

series::DecoherenceSeries run_gauss_momentum(const ScenarioConfig& c) {
    contmodels::GaussianMomentumParams p;
    p.sigma = require_param(c, "sigma");
    p.m = require_param(c, "mass");
    p.T = require_param(c, "temperature");
    p.gamma = require_param(c, "gamma");
    series::DecoherenceSeries s;
    s.columns = {"t", "de_analytic", "de_numeric"};
    for (double t : grid_of(c)) {
        const auto kern = contmodels::gaussian_momentum_kernel(p, t);
        s.add_row({t, contmodels::gaussian_momentum_de(p, t),
                   core::decoherence_continuous(kern)});
    }
    return s;
}

series::DecoherenceSeries run_gauss_position(const ScenarioConfig& c) {
    contmodels::GaussianPositionParams p;
    p.sigma = require_param(c, "sigma");
    p.m = require_param(c, "mass");
    p.T = require_param(c, "temperature");
    p.gamma = require_param(c, "gamma");
    series::DecoherenceSeries s;
    s.columns = {"t", "de_analytic", "de_numeric"};
    for (double t : grid_of(c)) {
        const auto kern = contmodels::gaussian_position_kernel(p, t);
        s.add_row({t, contmodels::gaussian_position_de(p, t),
                   core::decoherence_continuous(kern)});
    }
    return s;
}

series::DecoherenceSeries run_sterngerlach(const ScenarioConfig& c) {
    sterngerlach::SGModelParams p;
    p.epsilon = require_param(c, "epsilon");
    p.lambda = require_param(c, "splitting");
    p.m = require_param(c, "mass");
    p.sigma = require_param(c, "sigma");
    p.gamma = require_param(c, "gamma");
    p.lambda_T = require_param(c, "lambda_t");
    p.weight_up = require_param(c, "weight_up");
    return sterngerlach::de_timeline(p, grid_of(c));
}

series::DecoherenceSeries run_machzehnder(const ScenarioConfig& c) {
    using namespace machzehnder;
    const double gamma = require_param(c, "gamma");
    const double omega_s = require_param(c, "omega_s");
    const auto shots = static_cast<std::uint64_t>(require_param(c, "shots"));
    series::DecoherenceSeries s;
    s.columns = {"t", "de_analytic", "de_numeric", "i_diff_max"};
    std::uint64_t row_seed = c.seed;
    for (double t : grid_of(c)) {
        const TwoPathDensity rho = coherence_from_dephasing(gamma, t, omega_s);
        std::mt19937_64 rng(row_seed++);
        MeasurementConfig lower{Blocker::block_lower, 0.0, shots, 0};
        MeasurementConfig upper{Blocker::block_upper, 0.0, shots, 0};
        const auto rec_lower = shots ? intensities(rho, lower, rng) : intensities(rho, lower);
        const auto rec_upper = shots ? intensities(rho, upper, rng) : intensities(rho, upper);
        const auto scan = phase_scan(rho, 64, shots, shots ? &rng : nullptr);
        const double norm_tol = shots == 0 ? 1e-9 : 8.0 / std::sqrt(double(shots));
        const auto rep = estimate_de(rec_lower, rec_upper, scan.i_diff_max, norm_tol);
        s.add_row({t, rho.de(), rep.raw, scan.i_diff_max});
    }
    return s;
}

} // namespace

series::DecoherenceSeries run_scenario(const ScenarioConfig& config) {
    if (config.name == "spinbath") return run_spinbath(config);
    if (config.name == "spinboson") return run_spinboson(config);
    if (config.name == "freeparticle-planewave") return run_planewave(config);
    if (config.name == "freeparticle-gauss-momentum") return run_gauss_momentum(config);
    if (config.name == "freeparticle-gauss-position") return run_gauss_position(config);
    if (config.name == "sterngerlach") return run_sterngerlach(config);
    if (config.name == "machzehnder") return run_machzehnder(config);
    throw ConfigError("unknown scenario '" + config.name + "'");
}

series::DecoherenceSeries figure_series(int figure, int points) {
    if (points < 2) throw std::invalid_argument("figure_series: points must be >= 2");
    series::DecoherenceSeries s;
    if (figure == 1) {
        // Plane-wave measure vs t/tau_D; short-time regime where
        // z = sqrt(2 sigma) L = sqrt(2 t / tau_D). The naive exponential
        // 1 - exp(-t/tau_D) rides along for comparison.
        s.columns = {"t_over_tau_d", "de_paper", "de_oracle", "naive_exponential"};
        for (int i = 1; i <= points; ++i) {
            const double u = 5.0 * i / points;
            const double z = std::sqrt(2.0 * u);
            s.add_row({u, contmodels::de_plane_wave_paper_from_z(z),
                       contmodels::de_plane_wave_exact_from_z(z), 1.0 - std::exp(-u)});
        }
    } else if (figure == 2) {
        s.columns = {"t_over_tau_d", "de"};
        for (int i = 1; i <= points; ++i) {
            const double u = 5.0 * i / points;
            s.add_row({u, 1.0 - 1.0 / std::sqrt(1.0 + u)});
        }
    } else {
        throw std::invalid_argument("figure_series: figure must be 1 or 2");
    }
    return s;
}

} // namespace decolab::scenario
