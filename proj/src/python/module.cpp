#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chtwist/checks.hpp"
#include "chtwist/contact.hpp"
#include "chtwist/dynamics.hpp"
#include "chtwist/errors.hpp"
#include "chtwist/linalg.hpp"
#include "chtwist/report.hpp"
#include "chtwist/sampling.hpp"
#include "chtwist/twisted_form.hpp"

namespace py = pybind11;
using namespace chtwist;

namespace {

ModelParams make_params(int n, double c, double fd_step, double tol_fd, double tol_exact) {
    ModelParams p{n, c, fd_step, tol_fd, tol_exact};
    p.validate();
    return p;
}

PhaseGeometry geometry(const ModelParams& params, const Vec& x, const Vec& v) {
    return PhaseGeometry(params, {BasePoint(x), v});
}

py::object json_to_python(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Twisted symplectic form on the tangent bundle of complex hyperbolic space";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_ArithmeticError);
    py::register_exception<BasisMismatch>(m, "BasisMismatch", PyExc_TypeError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init(&make_params), py::arg("n") = 1, py::arg("c") = 1.0, py::arg("fd_step") = 1e-5,
             py::arg("tol_fd") = 1e-5, py::arg("tol_exact") = 1e-10)
        .def_readonly("n", &ModelParams::n)
        .def_readonly("c", &ModelParams::c)
        .def_readonly("fd_step", &ModelParams::fd_step)
        .def_readonly("tol_fd", &ModelParams::tol_fd)
        .def_readonly("tol_exact", &ModelParams::tol_exact)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(n=" + std::to_string(p.n) + ", c=" + format_double(p.c) + ")";
        });

    m.def("metric", [](const ModelParams& p, const Vec& x) { return metric(p, BasePoint(x)).matrix(); },
          py::arg("params"), py::arg("x"));
    m.def("complex_structure", py::overload_cast<const ModelParams&>(&complex_structure), py::arg("params"));
    m.def(
        "christoffel",
        [](const ModelParams& p, const Vec& x) {
            const Christoffel gamma = christoffel(p, BasePoint(x));
            std::vector<Mat> out;
            for (int k = 0; k < gamma.dim(); ++k) out.push_back(gamma.upper(k));
            return out;
        },
        py::arg("params"), py::arg("x"), "list over k of the matrices Gamma^k_ij");
    m.def(
        "curvature_algebraic",
        [](const ModelParams& p, const Vec& x, const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) {
            return curvature_algebraic(p, BasePoint(x), X, Y, Z, W);
        },
        py::arg("params"), py::arg("x"), py::arg("X"), py::arg("Y"), py::arg("Z"), py::arg("W"));
    m.def(
        "curvature_numeric",
        [](const ModelParams& p, const Vec& x, const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) {
            return curvature_numeric(p, BasePoint(x), X, Y, Z, W);
        },
        py::arg("params"), py::arg("x"), py::arg("X"), py::arg("Y"), py::arg("Z"), py::arg("W"));

    m.def(
        "adapted_frame", [](const ModelParams& p, const Vec& x, const Vec& v) {
            return geometry(p, x, v).adapted_frame().matrix();
        },
        py::arg("params"), py::arg("x"), py::arg("v"), "frame vectors as columns");
    m.def(
        "omega_total",
        [](const ModelParams& p, const Vec& x, const Vec& v, const std::string& basis) {
            const FormBasis b = basis == "coordinate" ? FormBasis::coordinate : FormBasis::sasaki_frame;
            return omega_total(geometry(p, x, v), b).matrix;
        },
        py::arg("params"), py::arg("x"), py::arg("v"), py::arg("basis") = "sasaki_frame");
    m.def(
        "assemble_dbeta",
        [](const ModelParams& p, const Vec& x, const Vec& v) {
            const MagneticDecomposition dec = assemble_dbeta(geometry(p, x, v));
            py::dict out;
            out["omega_h"] = dec.omega_h;
            out["dbeta_v"] = dec.dbeta_v;
            out["mixed"] = dec.mixed;
            out["assembled"] = dec.assembled.matrix;
            return out;
        },
        py::arg("params"), py::arg("x"), py::arg("v"), "Sasaki-frame blocks of d(beta)");
    m.def(
        "dbeta_fd_oracle",
        [](const ModelParams& p, const Vec& x, const Vec& v) {
            return dbeta_fd_oracle(p, {BasePoint(x), v}).matrix;
        },
        py::arg("params"), py::arg("x"), py::arg("v"), "coordinate-basis d(beta) by central differences");
    m.def("pfaffian", &pfaffian, py::arg("matrix"));

    m.def("hamiltonian", [](const ModelParams& p, const Vec& x, const Vec& v) {
        return hamiltonian(p, {BasePoint(x), v});
    }, py::arg("params"), py::arg("x"), py::arg("v"));
    m.def(
        "xh_closed",
        [](const ModelParams& p, const Vec& x, const Vec& v) {
            const TangentTT t = xh_closed(geometry(p, x, v));
            return py::make_tuple(t.first, t.second);
        },
        py::arg("params"), py::arg("x"), py::arg("v"), "(horizontal, vertical) Sasaki components");
    m.def(
        "xh_solve",
        [](const ModelParams& p, const Vec& x, const Vec& v) {
            const TangentTT t = xh_solve(geometry(p, x, v));
            return py::make_tuple(t.first, t.second);
        },
        py::arg("params"), py::arg("x"), py::arg("v"));
    m.def(
        "integrate_flow",
        [](const ModelParams& p, const Vec& x, const Vec& v, double T, double dt, const std::string& mode,
           long long stride) {
            FlowOptions options;
            options.mode = mode == "geodesic" ? FlowMode::geodesic : FlowMode::magnetic;
            options.sample_stride = stride;
            return json_to_python(to_json(integrate_flow(p, {BasePoint(x), v}, T, dt, options)));
        },
        py::arg("params"), py::arg("x"), py::arg("v"), py::arg("T"), py::arg("dt") = 1e-3,
        py::arg("mode") = "magnetic", py::arg("stride") = 1);

    m.def(
        "alpha_of_xh",
        [](const ModelParams& p, const Vec& x, const Vec& v) {
            const PhaseGeometry geom = geometry(p, x, v);
            return alpha(geom, xh_closed(geom));
        },
        py::arg("params"), py::arg("x"), py::arg("v"));
    m.def(
        "transversality_check",
        [](const ModelParams& p, const Vec& x, const Vec& v) {
            const TransversalityResult t = transversality_check(geometry(p, x, v));
            py::dict out;
            out["level"] = t.level;
            out["dh_x"] = t.dh_x;
            out["singular"] = t.singular;
            out["ambiguous"] = t.ambiguous;
            return out;
        },
        py::arg("params"), py::arg("x"), py::arg("v"));
    m.def(
        "contact_report",
        [](const ModelParams& p, double a, double b, int samples, std::uint64_t seed) {
            return json_to_python(to_json(contact_report(p, a, b, samples, seed)));
        },
        py::arg("params"), py::arg("a"), py::arg("b"), py::arg("samples") = 50, py::arg("seed") = kDefaultSeed);
    m.def(
        "verify",
        [](const ModelParams& p, int samples, std::uint64_t seed) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& r : run_verification_suite(p, samples, seed)) out.push_back(to_json(r));
            return json_to_python(out);
        },
        py::arg("params"), py::arg("samples") = 50, py::arg("seed") = kDefaultSeed);
}
