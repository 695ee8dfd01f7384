#include <entvis/cli.hpp>
#include <entvis/corrected.hpp>
#include <entvis/correlation.hpp>
#include <entvis/density.hpp>
#include <entvis/errors.hpp>
#include <entvis/io.hpp>
#include <entvis/radon.hpp>
#include <entvis/state.hpp>
#include <entvis/validation.hpp>
#include <entvis/visibility.hpp>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <sstream>

namespace py = pybind11;
using namespace entvis;

namespace {

// nlohmann -> Python through the json module keeps key order and null handling
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::array_t<double> to_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

} // namespace

PYBIND11_MODULE(_entvis, m) {
    m.doc() = "Visibility and correlation measures of entangled Gaussian double-slit states";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<UnsupportedBasisError>(m, "UnsupportedBasisError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

    py::class_<SetupParams>(m, "SetupParams")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("h1"), py::arg("h2"), py::arg("xi"))
        .def_property_readonly("a", &SetupParams::a)
        .def_property_readonly("h1", &SetupParams::h1)
        .def_property_readonly("h2", &SetupParams::h2)
        .def_property_readonly("xi", &SetupParams::xi)
        .def("with_xi", &SetupParams::with_xi)
        .def("with_a", &SetupParams::with_a)
        .def("swapped", &SetupParams::swapped)
        .def_property_readonly("regime_warning", &SetupParams::regime_warning)
        .def("__eq__", [](const SetupParams& x, const SetupParams& y) { return x == y; })
        .def("__repr__", [](const SetupParams& p) { return "SetupParams(" + p.describe() + ")"; });

    m.def("normalization_b2", &normalization_b2, py::arg("params"));
    m.def(
        "psi",
        [](const SetupParams& p, const std::string& basis, double u, double v) {
            const Amplitude a = psi(p, parse_basis(basis), u, v);
            return std::complex<double>(a.re, a.im);
        },
        py::arg("params"), py::arg("basis"), py::arg("u"), py::arg("v"));
    m.def(
        "density",
        [](const SetupParams& p, const std::string& basis, double u, double v) {
            return density_at(p, parse_basis(basis), u, v);
        },
        py::arg("params"), py::arg("basis"), py::arg("u"), py::arg("v"));
    m.def(
        "density_grid",
        [](const SetupParams& p, const std::string& basis, std::size_t nu, std::size_t nv, unsigned threads) {
            const BasisPair b = parse_basis(basis);
            const Density2D d = evaluate_density(p, b, default_grid(p, b, nu, nv), threads);
            py::array_t<double> out({d.grid.n_u, d.grid.n_v});
            std::copy(d.values.begin(), d.values.end(), out.mutable_data());
            return py::make_tuple(to_array({d.grid.u_min, d.grid.u_max, d.grid.v_min, d.grid.v_max}), out);
        },
        py::arg("params"), py::arg("basis") = "kk", py::arg("nu") = 128, py::arg("nv") = 128,
        py::arg("threads") = 1, "Returns ([u_min, u_max, v_min, v_max], values[nu, nv]).");
    m.def(
        "total_mass",
        [](const SetupParams& p, const std::string& basis) { return total_mass(p, parse_basis(basis)); },
        py::arg("params"), py::arg("basis"));

    m.def(
        "marginal",
        [](const SetupParams& p, const std::string& observable, const std::vector<double>& s, bool numeric) {
            const Observable o = parse_observable(observable);
            const Marginal1D r = numeric ? radon_numeric(p, kKK, RadonAngle::of(o, p), s)
                                         : closed_form_marginal_curve(p, o, s);
            return to_array(r.values);
        },
        py::arg("params"), py::arg("observable"), py::arg("s"), py::arg("numeric") = false);

    m.def(
        "visibility",
        [](const SetupParams& p, const std::string& observable) {
            return visibility(p, parse_observable(observable));
        },
        py::arg("params"), py::arg("observable"));
    m.def("single_particle_V", &single_particle_V, py::arg("params"));
    m.def("two_particle_D", &two_particle_D, py::arg("params"));
    m.def("two_particle_W", &two_particle_W, py::arg("params"));
    m.def(
        "epsilon_and_bound",
        [](const SetupParams& p) {
            const EpsilonBound e = epsilon_and_bound(p);
            return py::make_tuple(e.epsilon, e.bound);
        },
        py::arg("params"));

    m.def(
        "visibility_report", [](const SetupParams& p) { return to_py(to_json(visibility_report(p))); },
        py::arg("params"));
    m.def(
        "corrected_report",
        [](const SetupParams& p, const std::string& conv) { return to_py(to_json(corrected_F(p, parse_convention(conv)))); },
        py::arg("params"), py::arg("convention") = "b4_xi");
    m.def(
        "correlation_report",
        [](const SetupParams& p, double floor) { return to_py(to_json(complementarity_sums(p, floor))); },
        py::arg("params"), py::arg("floor") = kDefaultDetectabilityFloor);

    m.def(
        "rho_k",
        [](const SetupParams& p) {
            const RhoK r = rho_k(p);
            return py::make_tuple(r.log10_abs, r.sign);
        },
        py::arg("params"), "Returns (log10|rho_k|, sign).");
    m.def("rho_x", &rho_x, py::arg("params"));
    m.def("normalized_R", &normalized_R, py::arg("params"));
    m.def("normalized_S", &normalized_S, py::arg("params"));

    m.def(
        "sweep",
        [](const SetupParams& base, const std::string& param, double start, double stop, std::size_t count,
           unsigned threads) {
            std::ostringstream os;
            write_sweep_csv(os, param, run_sweep(base, param, start, stop, count, threads));
            return os.str();
        },
        py::arg("base"), py::arg("param") = "a", py::arg("start") = 2.0, py::arg("stop") = 8.0,
        py::arg("count") = 121, py::arg("threads") = 1, "Sweep table as CSV text.");

    m.def(
        "validate",
        [](bool quick) {
            ValidationOptions o;
            o.quick = quick;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : run_validation(o)) arr.push_back(to_json(c));
            return to_py(arr);
        },
        py::arg("quick") = true);

    m.def(
        "main",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"entvis"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out;
            std::ostringstream err;
            const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            py::print(out.str(), py::arg("end") = "");
            if (!err.str().empty()) {
                py::print(err.str(), py::arg("end") = "", py::arg("file") = py::module_::import("sys").attr("stderr"));
            }
            return rc;
        },
        py::arg("args"));

    m.attr("pi") = pi;
}
