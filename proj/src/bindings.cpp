#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptspec/boundary.hpp"
#include "ptspec/cubic.hpp"
#include "ptspec/matmodel.hpp"
#include "ptspec/metric.hpp"
#include "ptspec/spectrum.hpp"

namespace py = pybind11;
using namespace ptspec;

PYBIND11_MODULE(_ptspec, m) {
    m.doc() = "Spectra, domain boundary, exceptional points, and metric family of a "
              "PT-symmetric two- and three-level matrix model";

    py::register_exception<NoBoundaryOnRayError>(m, "NoBoundaryOnRayError",
                                                 PyExc_RuntimeError);

    py::class_<SquareMatrix>(m, "SquareMatrix")
        .def(py::init<int>(), py::arg("order"))
        .def_property_readonly("order", &SquareMatrix::order)
        .def("at", [](const SquareMatrix& mat, int i, int j) { return mat(i, j); },
             py::arg("i"), py::arg("j"))
        .def("max_abs", &SquareMatrix::max_abs)
        .def("tolist", [](const SquareMatrix& mat) {
            py::list rows;
            for (int i = 0; i < mat.order(); ++i) {
                py::list row;
                for (int j = 0; j < mat.order(); ++j) row.append(mat(i, j));
                rows.append(row);
            }
            return rows;
        });

    py::class_<ParityMatrix>(m, "ParityMatrix")
        .def_readonly("matrix", &ParityMatrix::matrix);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<int, double, double, double>(), py::arg("dimension") = 2,
             py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("c") = 0.0)
        .def_static("two_level", &ModelParams::two_level, py::arg("a"))
        .def_static("three_level", &ModelParams::three_level, py::arg("a"),
                    py::arg("b"), py::arg("c"))
        .def_readwrite("dimension", &ModelParams::dimension)
        .def_readwrite("a", &ModelParams::a)
        .def_readwrite("b", &ModelParams::b)
        .def_readwrite("c", &ModelParams::c);

    m.def("validate", &validate, py::arg("params"));
    m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"));
    m.def("build_parity", &build_parity, py::arg("dimension"));
    m.def("pseudo_hermiticity_residual", &pseudo_hermiticity_residual, py::arg("h"),
          py::arg("p"), "Max-abs entry of H^T P - P H; zero for every valid model.");

    py::class_<CubicPoly>(m, "CubicPoly")
        .def(py::init<double, double, double, double>(), py::arg("c3"), py::arg("c2"),
             py::arg("c1"), py::arg("c0"))
        .def_readwrite("c3", &CubicPoly::c3)
        .def_readwrite("c2", &CubicPoly::c2)
        .def_readwrite("c1", &CubicPoly::c1)
        .def_readwrite("c0", &CubicPoly::c0)
        .def("eval", py::overload_cast<double>(&CubicPoly::eval, py::const_),
             py::arg("e"));

    py::class_<ConjugatePair>(m, "ConjugatePair")
        .def_readonly("re", &ConjugatePair::re)
        .def_readonly("im", &ConjugatePair::im);

    py::class_<RootSet>(m, "RootSet")
        .def_readonly("degree", &RootSet::degree)
        .def_readonly("real_roots", &RootSet::real_roots)
        .def_readonly("multiplicities", &RootSet::multiplicities)
        .def_readonly("pair", &RootSet::pair)
        .def_readonly("discriminant", &RootSet::discriminant)
        .def("expanded", &RootSet::expanded,
             "All roots with multiplicity as complex numbers.");

    m.def("secular_cubic", &secular_cubic, py::arg("params"));
    m.def("solve_quadratic", &solve_quadratic, py::arg("a"));
    m.def("cubic_discriminant", &cubic_discriminant, py::arg("p"));
    m.def("discriminant_zero_threshold", &discriminant_zero_threshold, py::arg("p"));
    m.def("solve_cubic", &solve_cubic, py::arg("p"));

    py::enum_<SpectralClass>(m, "SpectralClass")
        .value("RealSimple", SpectralClass::RealSimple)
        .value("ExceptionalDouble", SpectralClass::ExceptionalDouble)
        .value("ExceptionalTriple", SpectralClass::ExceptionalTriple)
        .value("ComplexPair", SpectralClass::ComplexPair);

    py::class_<SpectrumClassification>(m, "SpectrumClassification")
        .def_readonly("spectral_class", &SpectrumClassification::spectral_class)
        .def_readonly("roots", &SpectrumClassification::roots)
        .def_readonly("jordan_defect", &SpectrumClassification::jordan_defect)
        .def_readonly("zero_band", &SpectrumClassification::zero_band);

    m.def("classify", &classify, py::arg("params"));
    m.def("jordan_defect", &jordan_defect, py::arg("h"), py::arg("eigenvalue"),
          py::arg("algebraic_multiplicity"));

    py::class_<MetricCandidate>(m, "MetricCandidate")
        .def_readonly("theta", &MetricCandidate::theta)
        .def_readonly("alpha_m", &MetricCandidate::alpha_m)
        .def_readonly("gamma", &MetricCandidate::gamma)
        .def_readonly("xi", &MetricCandidate::xi);

    py::class_<PositivityCertificate>(m, "PositivityCertificate")
        .def_readonly("is_positive", &PositivityCertificate::is_positive)
        .def_readonly("min_eigenvalue", &PositivityCertificate::min_eigenvalue);

    m.def("build_metric", &build_metric, py::arg("a"), py::arg("gamma"));
    m.def("quasi_hermiticity_residual", &quasi_hermiticity_residual, py::arg("h"),
          py::arg("theta"), "Max-abs entry of Theta H - H^T Theta.");
    m.def("positivity_certificate", &positivity_certificate, py::arg("theta"));
    m.def("ep_degeneration_scan", &ep_degeneration_scan, py::arg("gamma"),
          py::arg("a_sequence"));

    py::class_<BoundaryPoint>(m, "BoundaryPoint")
        .def_readonly("a", &BoundaryPoint::a)
        .def_readonly("b", &BoundaryPoint::b)
        .def_readonly("beta", &BoundaryPoint::beta)
        .def_readonly("theta", &BoundaryPoint::theta)
        .def_readonly("double_root_z", &BoundaryPoint::double_root_z)
        .def_readonly("single_root_y", &BoundaryPoint::single_root_y);

    py::enum_<BoundaryMethod>(m, "BoundaryMethod")
        .value("Parametric", BoundaryMethod::Parametric)
        .value("Bisection", BoundaryMethod::Bisection);

    py::class_<BoundaryCurve>(m, "BoundaryCurve")
        .def_readonly("points", &BoundaryCurve::points)
        .def_readonly("method", &BoundaryCurve::method)
        .def_readonly("c", &BoundaryCurve::c);

    py::class_<DepPoint>(m, "DepPoint")
        .def_readonly("a", &DepPoint::a)
        .def_readonly("b", &DepPoint::b)
        .def_readonly("c", &DepPoint::c)
        .def_readonly("z", &DepPoint::z);

    m.def("parametric_boundary", &parametric_boundary, py::arg("beta"),
          py::arg("sign_a") = 1, py::arg("sign_b") = 1);
    m.def("bisect_boundary", &bisect_boundary, py::arg("theta"), py::arg("c") = 0.0,
          py::arg("tol") = 1e-13);
    m.def("parametric_arc", &parametric_arc, py::arg("sign_a"), py::arg("sign_b"),
          py::arg("resolution"), py::arg("delta") = 1e-3);
    m.def("bisect_curve", &bisect_curve, py::arg("resolution"), py::arg("c") = 0.0,
          py::arg("tol") = 1e-13);
    m.def("dep_points", &dep_points, py::arg("c") = 0.0);
    m.def("lemma_eta", &lemma_eta, py::arg("b"), py::arg("tol") = 1e-13);
    m.def("epsilon_expansion_check", &epsilon_expansion_check, py::arg("eps"));
}
