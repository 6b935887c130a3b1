// module.cpp — python bindings for the core decoherence operations

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "decolab/continuous_models.hpp"
#include "decolab/core.hpp"
#include "decolab/mach_zehnder.hpp"
#include "decolab/scenario.hpp"
#include "decolab/spin_boson.hpp"

namespace py = pybind11;
using namespace decolab;

namespace {

core::Side side_from(const std::string& s) {
    if (s == "a") return core::Side::a;
    if (s == "b") return core::Side::b;
    throw std::invalid_argument("side must be 'a' or 'b'");
}

py::dict series_to_dict(const series::DecoherenceSeries& s) {
    py::dict d;
    d["columns"] = s.columns;
    d["rows"] = s.rows;
    return d;
}

} // namespace

PYBIND11_MODULE(decolab_core, m) {
    m.doc() = "Entanglement-based decoherence measure: core operations";

    m.def("purity", &core::purity, py::arg("rho"), "tr rho^2 of a validated density matrix");
    m.def("decoherence_finite", &core::decoherence_finite, py::arg("rho"),
          "(n/(n-1)) (1 - tr rho^2)");
    m.def(
        "validate_density",
        [](const core::Matrix& rho) {
            const auto rep = core::validate_density(rho);
            py::dict d;
            d["valid"] = rep.valid;
            d["herm_error"] = rep.herm_error;
            d["trace_error"] = rep.trace_error;
            d["min_eigenvalue"] = rep.min_eigenvalue;
            d["violations"] = rep.violations;
            return d;
        },
        py::arg("rho"));

    m.def(
        "partial_trace",
        [](const core::Vector& amplitudes, Eigen::Index na, Eigen::Index nb,
           const std::string& side) {
            core::BipartitePureState psi{na, nb, amplitudes};
            return core::partial_trace(psi, side_from(side));
        },
        py::arg("amplitudes"), py::arg("na"), py::arg("nb"), py::arg("side") = "a",
        "reduced density matrix of a bipartite pure state (amplitudes indexed a-major)");
    m.def(
        "concurrence_pure",
        [](const core::Vector& amplitudes, Eigen::Index na, Eigen::Index nb) {
            core::BipartitePureState psi{na, nb, amplitudes};
            return core::concurrence_pure(psi);
        },
        py::arg("amplitudes"), py::arg("na"), py::arg("nb"));

    m.def(
        "spin_boson_de",
        [](double gamma, double t) {
            spinboson::SpinBosonParams p;
            p.gamma = gamma;
            return spinboson::de_analytic(p, t);
        },
        py::arg("gamma"), py::arg("t"), "1 - exp(-4 gamma t)");
    m.def(
        "spin_boson_trajectory",
        [](double omega_s, double gamma, double t_end, int n_out) {
            spinboson::SpinBosonParams p;
            p.omega_s = omega_s;
            p.gamma = gamma;
            const auto traj = spinboson::integrate_master(p, t_end, n_out);
            return py::make_tuple(traj.times, traj.states);
        },
        py::arg("omega_s"), py::arg("gamma"), py::arg("t_end"), py::arg("n_out") = 101);

    m.def("de_plane_wave_paper", &contmodels::de_plane_wave_paper_from_z, py::arg("z"));
    m.def("de_plane_wave_exact", &contmodels::de_plane_wave_exact_from_z, py::arg("z"));
    m.def("thermal_wavelength", &contmodels::thermal_wavelength, py::arg("m"), py::arg("T"),
          py::arg("hbar") = 1.0, py::arg("kB") = 1.0);
    m.def(
        "gaussian_position_de",
        [](double sigma, double m_, double T, double gamma, double t) {
            contmodels::GaussianPositionParams p;
            p.sigma = sigma;
            p.m = m_;
            p.T = T;
            p.gamma = gamma;
            return contmodels::gaussian_position_de(p, t);
        },
        py::arg("sigma"), py::arg("mass"), py::arg("temperature"), py::arg("gamma"),
        py::arg("t"));
    m.def(
        "gaussian_momentum_de",
        [](double sigma, double m_, double T, double gamma, double t) {
            contmodels::GaussianMomentumParams p;
            p.sigma = sigma;
            p.m = m_;
            p.T = T;
            p.gamma = gamma;
            return contmodels::gaussian_momentum_de(p, t);
        },
        py::arg("sigma"), py::arg("mass"), py::arg("temperature"), py::arg("gamma"),
        py::arg("t"));

    m.def(
        "mach_zehnder_protocol",
        [](double rho11, double coherence, double theta, std::uint64_t shots, int trials,
           std::uint64_t seed) {
            machzehnder::TwoPathDensity rho(rho11, 1.0 - rho11, coherence, theta);
            const auto sum = machzehnder::monte_carlo_protocol(rho, shots, trials, seed);
            py::dict d;
            d["mean"] = sum.mean;
            d["stddev"] = sum.stddev;
            d["q025"] = sum.q025;
            d["q975"] = sum.q975;
            d["estimates"] = sum.estimates;
            d["true_de"] = rho.de();
            return d;
        },
        py::arg("rho11"), py::arg("coherence"), py::arg("theta") = 0.0, py::arg("shots") = 0,
        py::arg("trials") = 1, py::arg("seed") = 0);

    m.def(
        "run_scenario_text",
        [](const std::string& text) {
            return series_to_dict(scenario::run_scenario(scenario::parse_config_text(text)));
        },
        py::arg("config_text"), "parse a config document and run the scenario");
    m.def(
        "figure_series",
        [](int figure, int points) { return series_to_dict(scenario::figure_series(figure, points)); },
        py::arg("figure"), py::arg("points") = 100);

    py::register_exception<scenario::ConfigError>(m, "ConfigError", PyExc_ValueError);
}
