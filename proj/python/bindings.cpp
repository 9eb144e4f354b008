#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptverify/report.hpp"
#include "ptverify/sweep.hpp"

namespace py = pybind11;
using namespace ptverify;

PYBIND11_MODULE(_core, m) {
    m.doc() = "2x2 non-Hermitian matrix-model verification toolkit";

    auto err = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<NonFiniteError>(m, "NonFiniteError", err);
    py::register_exception<NotHermitianError>(m, "NotHermitianError", err);
    py::register_exception<NegativeEigenvalueError>(m, "NegativeEigenvalueError", err);
    py::register_exception<SingularFactorError>(m, "SingularFactorError", err);
    py::register_exception<BrokenPhaseError>(m, "BrokenPhaseError", err);
    py::register_exception<ExceptionalPointError>(m, "ExceptionalPointError", err);
    py::register_exception<OrthogonalPostSelectionError>(m, "OrthogonalPostSelectionError",
                                                         err);
    py::register_exception<InvalidInputError>(m, "InvalidInputError", err);

    py::class_<Vector2>(m, "Vector2")
        .def(py::init([](Complex a, Complex b) { return Vector2{a, b}; }), py::arg("a"),
             py::arg("b"))
        .def_readwrite("a", &Vector2::a)
        .def_readwrite("b", &Vector2::b)
        .def("norm", &Vector2::norm)
        .def("norm2", &Vector2::norm2)
        .def("normalized", &Vector2::normalized)
        .def("__repr__", [](const Vector2& v) {
            std::ostringstream out;
            out << "Vector2(" << v.a << ", " << v.b << ")";
            return out.str();
        });

    py::class_<Matrix2>(m, "Matrix2")
        .def(py::init([](Complex m11, Complex m12, Complex m21, Complex m22) {
                 return Matrix2{m11, m12, m21, m22};
             }),
             py::arg("m11"), py::arg("m12"), py::arg("m21"), py::arg("m22"))
        .def_readwrite("m11", &Matrix2::m11)
        .def_readwrite("m12", &Matrix2::m12)
        .def_readwrite("m21", &Matrix2::m21)
        .def_readwrite("m22", &Matrix2::m22)
        .def("trace", &Matrix2::trace)
        .def("det", &Matrix2::det)
        .def("adjoint", &Matrix2::adjoint)
        .def("frobenius", &Matrix2::frobenius)
        .def_static("identity", &Matrix2::identity)
        .def("rows",
             [](const Matrix2& v) {
                 return std::vector<std::vector<Complex>>{{v.m11, v.m12}, {v.m21, v.m22}};
             })
        .def("__repr__", [](const Matrix2& v) {
            std::ostringstream out;
            out << "Matrix2([" << v.m11 << ", " << v.m12 << "], [" << v.m21 << ", "
                << v.m22 << "])";
            return out.str();
        });

    py::class_<EigenSystem2>(m, "EigenSystem2")
        .def_readonly("lambda1", &EigenSystem2::lambda1)
        .def_readonly("lambda2", &EigenSystem2::lambda2)
        .def_readonly("v1", &EigenSystem2::v1)
        .def_readonly("v2", &EigenSystem2::v2)
        .def_readonly("degenerate", &EigenSystem2::degenerate);

    py::class_<PolarFactors>(m, "PolarFactors")
        .def_readonly("u", &PolarFactors::u)
        .def_readonly("r", &PolarFactors::r);

    m.def("inner", &inner, py::arg("x"), py::arg("y"));
    m.def("outer", &outer, py::arg("v"), py::arg("w"));
    m.def("eigen2", &eigen2);
    m.def("is_hermitian", &is_hermitian, py::arg("m"), py::arg("tol"));
    m.def("is_unitary", &is_unitary, py::arg("m"), py::arg("tol"));
    m.def("sqrt_psd", &sqrt_psd);
    m.def("polar", &polar);
    m.def("polar_completed", &polar_completed);
    m.def("residual_norm", &residual_norm, py::arg("m"), py::arg("lam"), py::arg("v"));

    py::class_<Params5>(m, "Params5")
        .def(py::init([](double r, double s, double t, double theta) {
                 return Params5{r, s, t, theta};
             }),
             py::arg("r"), py::arg("s"), py::arg("t"), py::arg("theta"))
        .def_readwrite("r", &Params5::r)
        .def_readwrite("s", &Params5::s)
        .def_readwrite("t", &Params5::t)
        .def_readwrite("theta", &Params5::theta);

    py::class_<Params4>(m, "Params4")
        .def(py::init([](double r, double s, double theta) { return Params4{r, s, theta}; }),
             py::arg("r"), py::arg("s"), py::arg("theta"))
        .def_readwrite("r", &Params4::r)
        .def_readwrite("s", &Params4::s)
        .def_readwrite("theta", &Params4::theta)
        .def("as_params5", &Params4::as_params5);

    py::class_<AlphaAngle>(m, "AlphaAngle")
        .def_readonly("alpha", &AlphaAngle::alpha)
        .def_readonly("cos_alpha", &AlphaAngle::cos_alpha)
        .def_readonly("sin_alpha", &AlphaAngle::sin_alpha);

    py::enum_<PhaseKind>(m, "PhaseKind")
        .value("Unbroken", PhaseKind::Unbroken)
        .value("ExceptionalPoint", PhaseKind::ExceptionalPoint)
        .value("Broken", PhaseKind::Broken);

    py::class_<PhaseClass>(m, "PhaseClass")
        .def_readonly("kind", &PhaseClass::kind)
        .def_readonly("discriminant", &PhaseClass::discriminant);

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("residual_plus", &ResidualReport::residual_plus)
        .def_readonly("residual_minus", &ResidualReport::residual_minus)
        .def_readonly("row_defects", &ResidualReport::row_defects)
        .def_readonly("s_equals_t", &ResidualReport::s_equals_t);

    m.def("build_h5", &build_h5);
    m.def("build_h4", &build_h4);
    m.def("classify", py::overload_cast<const Params5&>(&classify));
    m.def("classify", py::overload_cast<const Params4&>(&classify));
    m.def("alpha_of", py::overload_cast<const Params5&>(&alpha_of));
    m.def("alpha_of", py::overload_cast<const Params4&>(&alpha_of));
    m.def("spectrum_h5", &spectrum_h5);
    m.def("candidate_vectors", &candidate_vectors);
    m.def("eigen_residuals", py::overload_cast<const Params5&>(&eigen_residuals));
    m.def("eigen_residuals", py::overload_cast<const Params4&>(&eigen_residuals));
    m.def("pt_commutes", &pt_commutes);

    py::enum_<Regime>(m, "Regime")
        .value("RGreater", Regime::RGreater)
        .value("SGreater", Regime::SGreater)
        .value("Boundary", Regime::Boundary);

    py::class_<RegimeOperator>(m, "RegimeOperator")
        .def_readonly("matrix", &RegimeOperator::matrix)
        .def_readonly("regime", &RegimeOperator::regime)
        .def_readonly("eigs", &RegimeOperator::eigs);

    py::class_<EquivalentH>(m, "EquivalentH")
        .def_readonly("matrix", &EquivalentH::matrix)
        .def_readonly("lambda_plus", &EquivalentH::lambda_plus)
        .def_readonly("lambda_minus", &EquivalentH::lambda_minus);

    py::class_<WeakValueRecord>(m, "WeakValueRecord")
        .def_readonly("psi", &WeakValueRecord::psi)
        .def_readonly("phi", &WeakValueRecord::phi)
        .def_readonly("weak_value", &WeakValueRecord::weak_value)
        .def_readonly("overlap", &WeakValueRecord::overlap)
        .def_readonly("reconstructed", &WeakValueRecord::reconstructed)
        .def_readonly("direct", &WeakValueRecord::direct);

    py::enum_<Branch>(m, "Branch").value("Plus", Branch::Plus).value("Minus", Branch::Minus);

    m.def("regime_operator", &regime_operator);
    m.def("verify_polar_identity", &verify_polar_identity);
    m.def("weak_expectation", &weak_expectation, py::arg("h"), py::arg("psi"));
    m.def("equivalent_h", &equivalent_h);
    m.def("isospectral_gap", &isospectral_gap);
    m.def("regime_spectral_discrepancy", &regime_spectral_discrepancy);
    m.def("equiv_expectation", &equiv_expectation, py::arg("p"), py::arg("which"));

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("model", &VerifyReport::model)
        .def_readonly("params", &VerifyReport::params)
        .def_readonly("phase", &VerifyReport::phase)
        .def_readonly("spectrum", &VerifyReport::spectrum)
        .def_readonly("spectrum_oracle_gap", &VerifyReport::spectrum_oracle_gap)
        .def_readonly("pt_witness", &VerifyReport::pt_witness)
        .def_readonly("polar_reconstruction", &VerifyReport::polar_reconstruction)
        .def_readonly("polar_unitarity", &VerifyReport::polar_unitarity)
        .def_readonly("alpha", &VerifyReport::alpha)
        .def_readonly("residuals", &VerifyReport::residuals)
        .def_readonly("regime", &VerifyReport::regime)
        .def_readonly("regime_identity", &VerifyReport::regime_identity)
        .def_readonly("isospectral_gap", &VerifyReport::isospectral_gap)
        .def_readonly("regime_gaps", &VerifyReport::regime_gaps)
        .def_readonly("pipeline_error", &VerifyReport::pipeline_error)
        .def_readonly("pipeline_direct", &VerifyReport::pipeline_direct)
        .def_readonly("notes", &VerifyReport::notes)
        .def_readonly("violations", &VerifyReport::violations)
        .def("contracts_ok", &VerifyReport::contracts_ok);

    m.def("verify_point", py::overload_cast<const Params5&>(&verify_point));
    m.def("verify_point", py::overload_cast<const Params4&>(&verify_point));
    m.def("render_table", &render_table);
    m.def("render_json", &render_json);

    py::enum_<SweepModel>(m, "SweepModel")
        .value("H5", SweepModel::H5)
        .value("H4", SweepModel::H4);

    py::class_<Range>(m, "Range")
        .def(py::init([](double lo, double hi, int steps) { return Range{lo, hi, steps}; }),
             py::arg("min"), py::arg("max"), py::arg("steps"))
        .def_readwrite("min", &Range::min)
        .def_readwrite("max", &Range::max)
        .def_readwrite("steps", &Range::steps);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init([]() { return SweepSpec{}; }))
        .def_readwrite("model", &SweepSpec::model)
        .def_readwrite("r", &SweepSpec::r)
        .def_readwrite("s", &SweepSpec::s)
        .def_readwrite("t", &SweepSpec::t)
        .def_readwrite("theta", &SweepSpec::theta)
        .def("rows", &SweepSpec::rows);

    m.def("sweep_csv", [](const SweepSpec& spec) {
        std::ostringstream out;
        run_sweep(spec, out);
        return out.str();
    });

    m.def("format_full", &format_full);
}
