// decolab — command-line front end: scenario runs and figure-data emission

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "decolab/quadrature.hpp"
#include "decolab/scenario.hpp"
#include "decolab/series.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

int run_command(const std::string& config_path, const std::string& out_path,
                std::int64_t seed_override, int points_override, bool quiet) {
    decolab::scenario::ScenarioConfig cfg;
    try {
        cfg = decolab::scenario::parse_config(config_path);
        if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
        if (points_override > 0) cfg.grid.points = points_override;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    decolab::series::DecoherenceSeries series;
    try {
        series = decolab::scenario::run_scenario(cfg);
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }

    try {
        decolab::series::write_csv(series, out_path);
    } catch (const std::exception& e) {
        std::cerr << "output error: " << e.what() << "\n";
        return kExitIo;
    }
    if (!quiet)
        std::cout << "wrote " << series.rows.size() << " rows (" << cfg.name << ") to "
                  << out_path << "\n";
    return 0;
}

int figures_command(int figure, const std::string& out_path, bool quiet) {
    decolab::series::DecoherenceSeries series;
    try {
        series = decolab::scenario::figure_series(figure);
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    try {
        decolab::series::write_csv(series, out_path);
    } catch (const std::exception& e) {
        std::cerr << "output error: " << e.what() << "\n";
        return kExitIo;
    }
    if (!quiet) std::cout << "wrote figure " << figure << " data to " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decolab — decoherence measure scenarios"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path = "decolab_out.csv";
    std::int64_t seed = -1;
    int points = 0;
    bool quiet = false;

    auto* run = app.add_subcommand("run", "run a scenario config and write CSV");
    run->add_option("config", config_path, "scenario config file")->required();
    run->add_option("--out", out_path, "output CSV path");
    run->add_option("--seed", seed, "override the config seed");
    run->add_option("--points", points, "override the time-grid point count");
    run->add_flag("--quiet", quiet, "suppress status output");

    int figure = 1;
    std::string fig_out;
    auto* figs = app.add_subcommand("figures", "emit reference figure data");
    figs->add_option("figure", figure, "figure number (1 or 2)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    figs->add_option("--out", fig_out, "output path")->required();
    figs->add_flag("--quiet", quiet, "suppress status output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (run->parsed()) return run_command(config_path, out_path, seed, points, quiet);
    return figures_command(figure, fig_out, quiet);
}
