#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polscat/beams.hpp"
#include "polscat/force.hpp"
#include "polscat/scan.hpp"

namespace py = pybind11;
using namespace polscat;

namespace {

Scenario parse_or_throw(const std::string& text) {
    ParseResult r = parse_scenario(text);
    if (!r.ok()) {
        std::string msg = "invalid scenario:";
        for (const auto& e : r.errors) msg += "\n  - " + e;
        throw py::value_error(msg);
    }
    return *r.scenario;
}

}  // namespace

PYBIND11_MODULE(_polscat, m) {
    m.doc() = "Multilevel atoms as polarization-dependent scatterers: Jones transfer "
              "tensors, optical-pumping steady states, and sub-Doppler radiation forces.";

    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<SingularSystemError>(m, "SingularSystemError", PyExc_RuntimeError);
    py::register_exception<DarkStateError>(m, "DarkStateError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<UnsupportedConfigurationError>(m, "UnsupportedConfigurationError",
                                                          PyExc_RuntimeError);

    py::enum_<Basis>(m, "Basis")
        .value("CIRCULAR", Basis::Circular)
        .value("LINEAR", Basis::Linear);

    py::class_<JonesVector>(m, "JonesVector")
        .def(py::init<Complex, Complex, double, Basis>(), py::arg("mu"), py::arg("nu"),
             py::arg("k"), py::arg("basis") = Basis::Circular)
        .def_readonly("mu", &JonesVector::mu)
        .def_readonly("nu", &JonesVector::nu)
        .def_readonly("k", &JonesVector::k)
        .def_readonly("basis", &JonesVector::basis)
        .def("norm2", &JonesVector::norm2)
        .def("__repr__", [](const JonesVector& v) {
            std::ostringstream os;
            os << "JonesVector(mu=" << v.mu << ", nu=" << v.nu << ", k=" << v.k << ")";
            return os.str();
        });
    m.def("to_circular", &to_circular);
    m.def("to_linear", &to_linear);

    py::class_<TransferTensor>(m, "TransferTensor")
        .def_readonly("m11", &TransferTensor::m11)
        .def_readonly("m12", &TransferTensor::m12)
        .def_readonly("m21", &TransferTensor::m21)
        .def_readonly("m22", &TransferTensor::m22)
        .def("as_matrix", &TransferTensor::as_matrix)
        .def_static("identity", &TransferTensor::identity);

    py::class_<ModeQuartet>(m, "ModeQuartet")
        .def_readonly("a_out", &ModeQuartet::a_out)
        .def_readonly("b_in", &ModeQuartet::b_in)
        .def_readonly("c_in", &ModeQuartet::c_in)
        .def_readonly("d_out", &ModeQuartet::d_out);

    m.def("transfer_tensor", &transfer_tensor, py::arg("zeta"));
    m.def("compose", &compose, py::arg("left"), py::arg("right"));
    m.def("scatter", &scatter, py::arg("tensor"), py::arg("b_in"), py::arg("c_in"));

    py::class_<LevelScheme>(m, "LevelScheme")
        .def(py::init<double, double, Complex, Complex>(), py::arg("j_ground"),
             py::arg("j_excited"), py::arg("zeta0"), py::arg("dzeta0_dk") = Complex(0.0, 0.0))
        .def_property_readonly("j_ground", &LevelScheme::j_ground)
        .def_property_readonly("j_excited", &LevelScheme::j_excited)
        .def_property_readonly("zeta0", &LevelScheme::zeta0)
        .def_property_readonly("dzeta0_dk", &LevelScheme::dzeta0_dk)
        .def("dipole", &LevelScheme::dipole, py::arg("ground_index"), py::arg("q"));

    py::class_<GroundDensityMatrix>(m, "GroundDensityMatrix")
        .def(py::init<Eigen::MatrixXcd, bool>(), py::arg("entries"),
             py::arg("require_positive") = false)
        .def_property_readonly("matrix", &GroundDensityMatrix::matrix)
        .def("population", &GroundDensityMatrix::population, py::arg("m"))
        .def("coherence", &GroundDensityMatrix::coherence, py::arg("m_row"), py::arg("m_col"))
        .def_property_readonly("edge_coherence", &GroundDensityMatrix::edge_coherence);

    py::class_<PolarizabilityTensor>(m, "PolarizabilityTensor")
        .def(py::init<>())
        .def_readwrite("zeta", &PolarizabilityTensor::zeta)
        .def_readwrite("dzeta_dk", &PolarizabilityTensor::dzeta_dk);

    m.def("clebsch_gordan", &clebsch_gordan, py::arg("j_ground"), py::arg("m_ground"),
          py::arg("q"), py::arg("j_excited"));
    m.def("clebsch_gordan_squared",
          [](double jg, double mg, int q, double je) {
              Fraction f = clebsch_gordan_squared(jg, mg, q, je);
              return py::make_tuple(f.num, f.den);
          });
    m.def("chi_element", &chi_element, py::arg("scheme"), py::arg("i"), py::arg("j"));
    m.def("polarizability", &polarizability, py::arg("scheme"), py::arg("rho"));

    py::class_<LocalField>(m, "LocalField")
        .def(py::init([](Complex ep, Complex em, double k, double x) {
                 return LocalField{ep, em, k, x};
             }),
             py::arg("e_plus"), py::arg("e_minus"), py::arg("k"), py::arg("x") = 0.0)
        .def_readwrite("e_plus", &LocalField::e_plus)
        .def_readwrite("e_minus", &LocalField::e_minus)
        .def_readwrite("k", &LocalField::k)
        .def_readwrite("x", &LocalField::x)
        .def("intensity", &LocalField::intensity);

    m.def("steady_state", &steady_state, py::arg("scheme"), py::arg("field"));
    m.def(
        "nonadiabatic_populations",
        [](const LevelScheme& scheme, const std::function<LocalField(double)>& profile,
           double tau_p, double v, double x) {
            return nonadiabatic_populations(scheme, profile, PumpingParameters{tau_p, v}, x);
        },
        py::arg("scheme"), py::arg("profile"), py::arg("tau_p"), py::arg("v"), py::arg("x"));

    py::class_<ForceResult>(m, "ForceResult")
        .def_readonly("total", &ForceResult::total)
        .def_readonly("position_term", &ForceResult::position_term)
        .def_readonly("friction_term", &ForceResult::friction_term);

    py::class_<ForceExpansion>(m, "ForceExpansion")
        .def_readonly("approx", &ForceExpansion::approx)
        .def_readonly("cross_term", &ForceExpansion::cross_term)
        .def_readonly("exact_total", &ForceExpansion::exact_total);

    m.def("force_from_modes", &force_from_modes, py::arg("quartet"));
    m.def("force_expansion", &force_expansion, py::arg("zeta"), py::arg("b_in"),
          py::arg("c_in"), py::arg("v"));
    m.def("sisyphus_force", &sisyphus_force, py::arg("x"), py::arg("v"), py::arg("zeta0"),
          py::arg("b_amplitude"), py::arg("k"), py::arg("tau_p"));
    m.def("sigma_force", &sigma_force, py::arg("x"), py::arg("v"), py::arg("scheme"),
          py::arg("rho"), py::arg("b_amplitude"), py::arg("k"));

    py::class_<Element>(m, "Element")
        .def_static("atom", &Element::atom, py::arg("position"))
        .def_static("mirror",
                    py::overload_cast<double, Complex, Complex>(&Element::mirror),
                    py::arg("position"), py::arg("r_mu"), py::arg("r_nu"))
        .def_static("waveplate", &Element::waveplate, py::arg("position"),
                    py::arg("retardance"), py::arg("axis_angle"))
        .def_static("rotator", &Element::rotator, py::arg("position"), py::arg("angle"))
        .def_static("gap", &Element::gap, py::arg("position"), py::arg("length"))
        .def_readwrite("position", &Element::position)
        .def_property_readonly("kind", &Element::kind_name);

    m.def("element_tensor", &element_tensor, py::arg("element"), py::arg("k"));

    py::class_<SystemSolution>(m, "SystemSolution")
        .def_readonly("b_local", &SystemSolution::b_local)
        .def_readonly("c_local", &SystemSolution::c_local)
        .def_readonly("local_field", &SystemSolution::local_field)
        .def_readonly("boundary", &SystemSolution::boundary)
        .def_readonly("rho", &SystemSolution::rho)
        .def_readonly("iterations", &SystemSolution::iterations);

    m.def(
        "solve_system",
        [](const std::vector<Element>& elements, const JonesVector& b_in,
           const JonesVector& c_in, const LevelScheme& scheme, int max_iterations,
           double tolerance, double damping) {
            SolveOptions opt;
            opt.max_iterations = max_iterations;
            opt.tolerance = tolerance;
            opt.damping = damping;
            return solve_system(elements, b_in, c_in, scheme, opt);
        },
        py::arg("elements"), py::arg("b_in"), py::arg("c_in"), py::arg("scheme"),
        py::arg("max_iterations") = 200, py::arg("tolerance") = 1e-12,
        py::arg("damping") = 1.0);

    m.def("lin_perp_lin_beams", [](double b, double k, double x) {
        BeamPair p = lin_perp_lin_beams(b, k, x);
        return py::make_tuple(p.b, p.c);
    });
    m.def("sigma_beams", [](double b, double k, double x) {
        BeamPair p = sigma_beams(b, k, x);
        return py::make_tuple(p.b, p.c);
    });
    m.def("local_field", &local_field, py::arg("b"), py::arg("c"), py::arg("x"));

    m.def("scan_csv",
          [](const std::string& scenario_text, int threads, const std::string& units) {
              Scenario sc = parse_or_throw(scenario_text);
              ScanResult res = run_scan(sc, threads);
              std::ostringstream os;
              write_csv(res, sc, os, units == "si" ? Units::Si : Units::Natural);
              return os.str();
          },
          py::arg("scenario_text"), py::arg("threads") = 1, py::arg("units") = "natural");

    m.attr("__version__") = "0.1.0";
}
