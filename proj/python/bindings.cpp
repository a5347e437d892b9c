#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qosc/analytic.hpp"
#include "qosc/errors.hpp"
#include "qosc/measures.hpp"
#include "qosc/model.hpp"
#include "qosc/sim/config.hpp"
#include "qosc/sim/runner.hpp"
#include "qosc/sim/series.hpp"

namespace py = pybind11;
using namespace qosc;
using nlohmann::json;

namespace {

ModelParams make_params(double omega0, double omega, double g, double lambda, double mu, double gamma,
                        const std::string& variant) {
    ModelParams p{omega0, omega, g, lambda, mu, gamma, Variant::Complete};
    if (variant == "rwa")
        p.variant = Variant::Rwa;
    else if (variant != "complete")
        throw ConfigError("variant must be 'complete' or 'rwa'");
    return p;
}

py::dict table_dict(const sim::Table& t) {
    py::dict out;
    out[py::str(t.key_name)] = t.key;
    for (const auto& [name, values] : t.columns) out[py::str(name)] = values;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two qubit-oscillator subsystems: analytic reduced dynamics and entanglement measures.";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<StabilityError>(m, "StabilityError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<InvalidState>(m, "InvalidState", PyExc_ValueError);
    py::register_exception<CutoffTooSmall>(m, "CutoffTooSmall", PyExc_ValueError);

    py::class_<DerivedParams>(m, "DerivedParams")
        .def_readonly("delta", &DerivedParams::delta)
        .def_readonly("r_plus", &DerivedParams::r_plus)
        .def_readonly("r_minus", &DerivedParams::r_minus)
        .def_readonly("Omega_plus", &DerivedParams::Omega_plus)
        .def_readonly("Omega_minus", &DerivedParams::Omega_minus)
        .def_readonly("lam_plus", &DerivedParams::lam_plus)
        .def_readonly("lam_minus", &DerivedParams::lam_minus)
        .def_readonly("omega0_eff", &DerivedParams::omega0_eff)
        .def_readonly("chi", &DerivedParams::chi);

    m.def(
        "derive",
        [](double omega0, double omega, double g, double lambda, double mu, const std::string& v) {
            return derive(validate(make_params(omega0, omega, g, lambda, mu, 0.0, v)));
        },
        py::arg("omega0") = 1.0, py::arg("omega") = 1.0, py::arg("g") = 0.025, py::arg("lambda_") = 0.0,
        py::arg("mu") = 1.0, py::arg("variant") = "complete",
        "Diagonal-frame constants; raises StabilityError outside the stable region.");

    m.def(
        "density_matrix",
        [](double t, std::complex<double> alpha, std::complex<double> beta, double omega0, double omega, double g,
           double lambda, double mu, double gamma, const std::string& v) {
            const ModelParams p = make_params(omega0, omega, g, lambda, mu, gamma, v);
            const DerivedParams d = derive(validate(p));
            return Eigen::Matrix4cd(qubit_density_matrix(t, d, transform_amplitudes({alpha, beta}, d), gamma));
        },
        py::arg("t"), py::arg("alpha") = std::complex<double>(0.0), py::arg("beta") = std::complex<double>(0.0),
        py::arg("omega0") = 1.0, py::arg("omega") = 1.0, py::arg("g") = 0.025, py::arg("lambda_") = 0.0,
        py::arg("mu") = 1.0, py::arg("gamma") = 0.0, py::arg("variant") = "complete",
        "Reduced two-qubit state in the (ee, eg, ge, gg) basis.");

    m.def(
        "purity_closed_form",
        [](double t, double omega0, double omega, double g, double lambda, double mu, double gamma,
           const std::string& v) {
            const ModelParams p = make_params(omega0, omega, g, lambda, mu, gamma, v);
            return purity_closed_form(t, derive(validate(p)), gamma);
        },
        py::arg("t"), py::arg("omega0") = 1.0, py::arg("omega") = 1.0, py::arg("g") = 0.025, py::arg("lambda_") = 0.0,
        py::arg("mu") = 1.0, py::arg("gamma") = 0.0, py::arg("variant") = "complete");

    m.def("purity", [](const Eigen::Matrix4cd& rho) { return purity(rho); }, py::arg("rho"));
    m.def("concurrence", [](const Eigen::Matrix4cd& rho) { return concurrence(rho); }, py::arg("rho"));
    m.def("eof", [](const Eigen::Matrix4cd& rho) { return eof(rho); }, py::arg("rho"));

    m.def("preset_names", &sim::preset_names);

    m.def(
        "run_timeseries",
        [](const std::string& config, const std::vector<std::string>& overrides) {
            py::list out;
            for (const auto& cfg : sim::resolve(json::parse(config), overrides)) {
                const sim::TimeSeries ts = sim::run_timeseries(cfg);
                out.append(py::make_tuple(table_dict(ts), ts.metadata.dump()));
            }
            return out;
        },
        py::arg("config"), py::arg("overrides") = std::vector<std::string>{},
        "Runs every panel of a JSON configuration; returns (columns, metadata JSON) pairs.");

    m.def(
        "to_csv",
        [](const std::string& config, const std::vector<std::string>& overrides) {
            const auto cfgs = sim::resolve(json::parse(config), overrides);
            if (cfgs.size() != 1) throw ConfigError("to_csv needs a single-panel configuration");
            return sim::to_csv(sim::run_timeseries(cfgs.front()));
        },
        py::arg("config"), py::arg("overrides") = std::vector<std::string>{});

    m.def(
        "compare",
        [](const std::string& config, const std::vector<std::string>& overrides) {
            const auto cfgs = sim::resolve(json::parse(config), overrides);
            if (cfgs.size() != 1) throw ConfigError("compare needs a single-panel configuration");
            return sim::run_compare(cfgs.front()).dump();
        },
        py::arg("config"), py::arg("overrides") = std::vector<std::string>{},
        "Analytic versus truncated-Fock report as a JSON string.");

    m.def(
        "params_table",
        [](const std::vector<double>& lambdas, double omega0, double omega, double g, double mu) {
            ModelParams base{omega0, omega, g, 0.0, mu, 0.0, Variant::Complete};
            return table_dict(sim::run_params_table(lambdas, base));
        },
        py::arg("lambdas"), py::arg("omega0") = 1.0, py::arg("omega") = 1.0, py::arg("g") = 0.025,
        py::arg("mu") = 1.0);

    m.attr("__version__") = sim::code_version();
}
