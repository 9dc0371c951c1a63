#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greenbound/greenbound.hpp"

namespace py = pybind11;
namespace gb = greenbound;

namespace {

void bind_errors(py::module_& m) {
    auto base = py::register_exception<gb::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<gb::InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<gb::EigenFailure>(m, "EigenFailure", base.ptr());
    py::register_exception<gb::RangeError>(m, "RangeError", base.ptr());
    py::register_exception<gb::EvaluationError>(m, "EvaluationError", base.ptr());
    py::register_exception<gb::ContourError>(m, "ContourError", base.ptr());
    py::register_exception<gb::DistinctnessViolation>(m, "DistinctnessViolation", base.ptr());
    py::register_exception<gb::DichotomyViolation>(m, "DichotomyViolation", base.ptr());
    py::register_exception<gb::WindowError>(m, "WindowError", base.ptr());
    py::register_exception<gb::GenerationError>(m, "GenerationError", base.ptr());
}

void bind_functions(py::module_& m) {
    py::class_<gb::AnalyticFn>(m, "AnalyticFn")
        .def_property_readonly("name", &gb::AnalyticFn::name)
        .def("value", &gb::AnalyticFn::value, py::arg("z"))
        .def(
            "jet",
            [](const gb::AnalyticFn& f, gb::Complex center, int order) {
                const gb::Jet j = f.jet(center, order);
                return std::vector<gb::Complex>(j.coeffs().begin(), j.coeffs().end());
            },
            py::arg("center"), py::arg("order"), "Taylor coefficients f^(r)(center)/r!, r = 0..order")
        .def_property_readonly("poles", [](const gb::AnalyticFn& f) {
            return std::vector<gb::Complex>(f.poles().begin(), f.poles().end());
        });

    auto fn = m.def_submodule("fn", "Provided analytic functions");
    fn.def("exp_t", &gb::fn::exp_t, py::arg("t"));
    fn.def("polynomial", &gb::fn::polynomial, py::arg("coeffs"));
    fn.def("constant", &gb::fn::constant, py::arg("c"));
    fn.def("reciprocal_product", &gb::fn::reciprocal_product, py::arg("poles"));
    fn.def("exp_over_product", &gb::fn::exp_over_product, py::arg("t"), py::arg("poles"));
    fn.def("tilde_exp_plus", &gb::fn::tilde_exp_plus, py::arg("t"), py::arg("mu"));
    fn.def("tilde_exp_minus", &gb::fn::tilde_exp_minus, py::arg("t"), py::arg("nu"));
    fn.def("exp_plus", &gb::fn::exp_plus, py::arg("t"));
    fn.def("exp_minus", &gb::fn::exp_minus, py::arg("t"));
    fn.def("left_half_indicator", &gb::fn::left_half_indicator);
}

void bind_linalg(py::module_& m) {
    m.def("op_norm", &gb::op_norm, py::arg("a"));
    m.def(
        "eigenvalues", [](const gb::ComplexMatrix& a) { return gb::eigenvalues(a).eigenvalues; }, py::arg("a"));
    m.def(
        "cluster_eigenvalues",
        [](std::vector<gb::Complex> values, double tol) {
            return gb::cluster_eigenvalues(gb::Spectrum{std::move(values)}, tol).eigenvalues;
        },
        py::arg("values"), py::arg("tol"));
    m.def("expm", &gb::expm, py::arg("a"), py::arg("t"));
}

void bind_interpolation(py::module_& m) {
    m.def("divided_difference_table", [](const gb::AnalyticFn& f, const gb::NodeList& nodes) {
        return gb::divided_difference_table(f, nodes);
    }, py::arg("f"), py::arg("nodes"));
    m.def("dd_contour_oracle", [](const gb::AnalyticFn& f, const gb::NodeList& nodes, double margin, int points) {
        return gb::dd_contour_oracle(f, nodes, margin, points);
    }, py::arg("f"), py::arg("nodes"), py::arg("radius_margin") = 1.0, py::arg("quad_points") = 256);
    m.def("dd_distinct_formula", [](const gb::AnalyticFn& f, const gb::NodeList& nodes) {
        return gb::dd_distinct_formula(f, nodes);
    }, py::arg("f"), py::arg("nodes"));
    m.def("gelfond_bound", [](const gb::AnalyticFn& f, const gb::NodeList& nodes, int samples) {
        return gb::gelfond_bound(f, nodes, samples);
    }, py::arg("f"), py::arg("nodes"), py::arg("boundary_samples") = 512);

    py::class_<gb::NewtonPolynomial>(m, "NewtonPolynomial")
        .def(py::init<gb::NodeList, std::vector<gb::Complex>>(), py::arg("nodes"), py::arg("coeffs"))
        .def_property_readonly("nodes", &gb::NewtonPolynomial::nodes)
        .def_property_readonly("coeffs", &gb::NewtonPolynomial::coeffs)
        .def("__call__", [](const gb::NewtonPolynomial& p, gb::Complex z) { return p(z); }, py::arg("z"))
        .def("eval_matrix", &gb::eval_matrix, py::arg("a"));
    m.def("build_newton", &gb::build_newton, py::arg("f"), py::arg("nodes"));
    m.def("matrix_function", &gb::matrix_function, py::arg("f"), py::arg("a"), py::arg("nodes"));
    m.def("hermite_check", &gb::hermite_check, py::arg("p"), py::arg("f"), py::arg("tolerance"));
}

void bind_green(py::module_& m) {
    py::enum_<gb::TimeSign>(m, "TimeSign")
        .value("positive", gb::TimeSign::positive)
        .value("negative", gb::TimeSign::negative);

    py::class_<gb::DichotomyData>(m, "DichotomyData")
        .def_readonly("mu", &gb::DichotomyData::mu)
        .def_readonly("nu", &gb::DichotomyData::nu)
        .def_readonly("gamma_plus", &gb::DichotomyData::gamma_plus)
        .def_readonly("gamma_minus", &gb::DichotomyData::gamma_minus)
        .def_property_readonly("k", &gb::DichotomyData::k)
        .def_property_readonly("m", &gb::DichotomyData::m);
    m.def("split_spectrum", &gb::split_spectrum, py::arg("a"), py::arg("axis_tol") = std::nullopt);
    m.def("ordered_nodes", &gb::ordered_nodes, py::arg("d"), py::arg("sign"));

    m.def("green_newton", &gb::green_newton, py::arg("a"), py::arg("d"), py::arg("t"));
    m.def("green_limit", &gb::green_limit, py::arg("a"), py::arg("d"), py::arg("side"));
    m.def("spectral_projector", &gb::spectral_projector, py::arg("a"), py::arg("d"));
    m.def("green_projector", &gb::green_projector, py::arg("a"), py::arg("d"), py::arg("t"));

    py::class_<gb::ForcingFn>(m, "ForcingFn")
        .def_readonly("family", &gb::ForcingFn::family)
        .def_readonly("params", &gb::ForcingFn::params)
        .def_readonly("sup_norm", &gb::ForcingFn::sup_norm)
        .def("__call__", [](const gb::ForcingFn& f, double s) { return f(s); }, py::arg("s"));
    m.def("constant_forcing", &gb::constant_forcing, py::arg("v"));
    m.def("sine_forcing", &gb::sine_forcing, py::arg("omega"), py::arg("v"));
    m.def("gaussian_pulse_forcing", &gb::gaussian_pulse_forcing, py::arg("v"));

    py::class_<gb::BoundedSolver>(m, "BoundedSolver")
        .def(py::init<gb::ComplexMatrix, gb::DichotomyData, gb::ForcingFn, double>(), py::arg("a"), py::arg("d"),
             py::arg("f"), py::arg("eps"))
        .def("calibrate", [](gb::BoundedSolver& s, const std::vector<double>& ts) { s.calibrate(ts); },
             py::arg("ts"))
        .def("__call__", &gb::BoundedSolver::operator(), py::arg("t"))
        .def_property_readonly("window", &gb::BoundedSolver::window)
        .def_property_readonly("panels", &gb::BoundedSolver::panels);
    m.def("bounded_solution", &gb::bounded_solution, py::arg("a"), py::arg("d"), py::arg("f"), py::arg("t"),
          py::arg("eps") = 1e-6);
    m.def("residual", &gb::residual, py::arg("a"), py::arg("x_eval"), py::arg("f"), py::arg("t"),
          py::arg("h") = 1e-3);
}

void bind_bounds(py::module_& m) {
    py::class_<gb::BoundParams>(m, "BoundParams")
        .def(py::init([](double t, double norm_a, int k, int m_, double gamma_minus, double gamma_plus) {
                 return gb::BoundParams{t, norm_a, k, m_, gamma_minus, gamma_plus};
             }),
             py::arg("t"), py::arg("norm_a"), py::arg("k"), py::arg("m"), py::arg("gamma_minus"),
             py::arg("gamma_plus"))
        .def_readwrite("t", &gb::BoundParams::t)
        .def_readwrite("norm_a", &gb::BoundParams::norm_a)
        .def_readwrite("k", &gb::BoundParams::k)
        .def_readwrite("m", &gb::BoundParams::m)
        .def_readwrite("gamma_minus", &gb::BoundParams::gamma_minus)
        .def_readwrite("gamma_plus", &gb::BoundParams::gamma_plus)
        .def_property_readonly("gamma", &gb::BoundParams::gamma);

    py::class_<gb::BoundTerm>(m, "BoundTerm")
        .def_readonly("numerator", &gb::BoundTerm::numerator)
        .def_readonly("denominator", &gb::BoundTerm::denominator)
        .def_readonly("pow_t", &gb::BoundTerm::pow_t)
        .def_readonly("pow_norm_a", &gb::BoundTerm::pow_norm_a)
        .def_readonly("pow_inv_gamma", &gb::BoundTerm::pow_inv_gamma)
        .def_readonly("pow_two", &gb::BoundTerm::pow_two)
        .def_property_readonly("coef", &gb::BoundTerm::coef)
        .def("__repr__", [](const gb::BoundTerm& b) {
            return "BoundTerm(" + std::to_string(b.numerator) + "/" + std::to_string(b.denominator) +
                   ", t^" + std::to_string(b.pow_t) + ", |A|^" + std::to_string(b.pow_norm_a) + ", 2^" +
                   std::to_string(b.pow_two) + ", gamma^-" + std::to_string(b.pow_inv_gamma) + ")";
        });

    m.def("make_bound_params", &gb::make_bound_params, py::arg("a"), py::arg("d"), py::arg("t"));
    m.def("binom_conv", &gb::binom_conv, py::arg("a"), py::arg("b"));
    m.def("lemma_derivative_bound", &gb::lemma_derivative_bound, py::arg("l"), py::arg("t"), py::arg("k"),
          py::arg("gamma_minus"), py::arg("gamma_plus"));
    m.def("green_bound", &gb::green_bound, py::arg("p"));
    m.def("green_bound_terms", &gb::green_bound_terms, py::arg("k"), py::arg("m"), py::arg("sign"));
    m.def("expm_bound", &gb::expm_bound, py::arg("t"), py::arg("norm_a"), py::arg("n"), py::arg("gamma_minus"));
    m.def("bound_tail_integral", &gb::bound_tail_integral, py::arg("p"), py::arg("w"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Green's function of x' = Ax + f via Newton interpolation, with closed-form norm bounds";
    bind_errors(m);
    bind_functions(m);
    bind_linalg(m);
    bind_interpolation(m);
    bind_green(m);
    bind_bounds(m);
}
