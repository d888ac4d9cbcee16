#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spinor3/algebra.hpp"
#include "spinor3/calculus.hpp"
#include "spinor3/charts.hpp"
#include "spinor3/checks.hpp"
#include "spinor3/model_map.hpp"
#include "spinor3/proper_model.hpp"
#include "spinor3/pseudo_model.hpp"
#include "spinor3/transport.hpp"

namespace py = pybind11;
using namespace spinor3;

namespace {

std::vector<std::vector<double>> mat3_rows(const Mat3& m) {
    std::vector<std::vector<double>> rows(3, std::vector<double>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[i][j] = m(i, j);
    return rows;
}

std::vector<std::vector<Complex>> mat2_rows(const Mat2c& m) {
    std::vector<std::vector<Complex>> rows(2, std::vector<Complex>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rows[i][j] = m(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_spinor3, m) {
    m.doc() = "Spatial spinor fields over a double-covered 3-space";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SingularPointError>(m, "SingularPointError", PyExc_ArithmeticError);
    py::register_exception<ResolutionError>(m, "ResolutionError", PyExc_ValueError);

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("norm", &Vec3::norm)
        .def("rho", &Vec3::rho)
        .def("__iter__",
             [](const Vec3& v) { return py::iter(py::make_tuple(v.x, v.y, v.z)); })
        .def("__repr__", [](const Vec3& v) {
            std::ostringstream os;
            os << "Vec3(" << v.x << ", " << v.y << ", " << v.z << ")";
            return os.str();
        });

    py::class_<Spinor>(m, "Spinor")
        .def(py::init<Complex, Complex>(), py::arg("c1"), py::arg("c2"))
        .def_readwrite("c1", &Spinor::c1)
        .def_readwrite("c2", &Spinor::c2)
        .def("norm_sq", &Spinor::norm_sq)
        .def("__neg__", [](const Spinor& s) { return -s; })
        .def("__repr__", [](const Spinor& s) {
            auto fmt = [](const Complex& c) {
                std::ostringstream os;
                os << "(" << c.real() << (std::signbit(c.imag()) ? "" : "+") << c.imag()
                   << "j)";
                return os.str();
            };
            return "Spinor(" + fmt(s.c1) + ", " + fmt(s.c2) + ")";
        });
    m.def("spinor_dist", &spinor_dist, py::arg("a"), py::arg("b"));

    // ----- algebra ----------------------------------------------------------
    py::enum_<Parity>(m, "Parity")
        .value("Proper", Parity::Proper)
        .value("Reflected", Parity::Reflected);
    py::enum_<SpinorType>(m, "SpinorType")
        .value("T1", SpinorType::T1)
        .value("T2", SpinorType::T2);

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init([](double n0, const Vec3& n, Parity parity) {
                 return GroupElement{n0, n, parity};
             }),
             py::arg("n0"), py::arg("n"), py::arg("parity") = Parity::Proper)
        .def_readwrite("n0", &GroupElement::n0)
        .def_readwrite("n", &GroupElement::n)
        .def_readwrite("parity", &GroupElement::parity)
        .def("constraint_residual", &GroupElement::constraint_residual);

    m.def("group_identity", &group_identity);
    m.def(
        "su2_matrix", [](const GroupElement& g) { return mat2_rows(su2_matrix(g)); },
        py::arg("g"));
    m.def(
        "so3_matrix", [](const GroupElement& g) { return mat3_rows(so3_matrix(g)); },
        py::arg("g"));
    m.def("compose", &compose, py::arg("g"), py::arg("h"));
    m.def("inverse", &inverse, py::arg("g"));
    m.def("act_on_spinor", &act_on_spinor, py::arg("g"), py::arg("s"));
    m.def("act_on_vector", &act_on_vector, py::arg("g"), py::arg("v"));
    m.def("parity_on_spinor", &parity_on_spinor, py::arg("type"), py::arg("s"));

    // ----- pseudo model -----------------------------------------------------
    py::enum_<RegionTag>(m, "RegionTag")
        .value("InteriorPlus", RegionTag::InteriorPlus)
        .value("InteriorMinus", RegionTag::InteriorMinus)
        .value("Plane", RegionTag::Plane)
        .value("AxisPlus", RegionTag::AxisPlus)
        .value("AxisMinus", RegionTag::AxisMinus)
        .value("Origin", RegionTag::Origin)
        .value("Cut", RegionTag::Cut);
    py::enum_<GammaMode>(m, "GammaMode")
        .value("PrincipalVector", GammaMode::PrincipalVector)
        .value("PrincipalExtended", GammaMode::PrincipalExtended)
        .value("RealLift", GammaMode::RealLift);

    py::class_<BranchContext>(m, "BranchContext")
        .def(py::init([](double gamma_axis, GammaMode mode, double axis_tol,
                         double gamma_lift) {
                 BranchContext c;
                 c.gamma_axis = gamma_axis;
                 c.mode = mode;
                 c.axis_tol = axis_tol;
                 c.gamma_lift = gamma_lift;
                 return c;
             }),
             py::arg("gamma_axis") = 0.0, py::arg("mode") = GammaMode::PrincipalVector,
             py::arg("axis_tol") = 1e-12, py::arg("gamma_lift") = 0.0)
        .def_readwrite("gamma_axis", &BranchContext::gamma_axis)
        .def_readwrite("mode", &BranchContext::mode)
        .def_readwrite("axis_tol", &BranchContext::axis_tol)
        .def_readwrite("gamma_lift", &BranchContext::gamma_lift);

    py::class_<PseudoVectorState>(m, "PseudoVectorState")
        .def(py::init<double, double, double>(), py::arg("a1"), py::arg("a2"),
             py::arg("a3"))
        .def(py::init<const Vec3&>(), py::arg("v"))
        .def_readwrite("a1", &PseudoVectorState::a1)
        .def_readwrite("a2", &PseudoVectorState::a2)
        .def_readwrite("a3", &PseudoVectorState::a3)
        .def("a", &PseudoVectorState::a)
        .def("rho", &PseudoVectorState::rho);

    py::class_<PolarSpinorParams>(m, "PolarSpinorParams")
        .def(py::init([](double N, double M, double n, double mm) {
                 PolarSpinorParams p;
                 p.N = N;
                 p.M = M;
                 p.n = n;
                 p.m = mm;
                 return p;
             }),
             py::arg("N"), py::arg("M"), py::arg("n") = 0.0, py::arg("m") = 0.0)
        .def_readwrite("N", &PolarSpinorParams::N)
        .def_readwrite("M", &PolarSpinorParams::M)
        .def_readwrite("n", &PolarSpinorParams::n)
        .def_readwrite("m", &PolarSpinorParams::m)
        .def_readonly("n_mute", &PolarSpinorParams::n_mute)
        .def_readonly("m_mute", &PolarSpinorParams::m_mute)
        .def("kappa", &PolarSpinorParams::kappa)
        .def("gamma", &PolarSpinorParams::gamma);

    m.def("classify_region", &classify_region, py::arg("v"),
          py::arg("ctx") = BranchContext{});
    m.def("gamma_of", &gamma_of, py::arg("v"), py::arg("ctx") = BranchContext{},
          py::arg("sheet") = 1);
    m.def("xi_from_pseudo", &xi_from_pseudo, py::arg("v"), py::arg("ctx") = BranchContext{},
          py::arg("sheet") = 1);
    m.def("pseudo_from_xi", &pseudo_from_xi, py::arg("s"));
    m.def("xi_from_polar", &xi_from_polar, py::arg("params"),
          py::arg("include_kappa_phase") = false);
    m.def("polar_from_xi", &polar_from_xi, py::arg("s"));

    // ----- proper model -----------------------------------------------------
    py::enum_<HalfSpaceSign>(m, "HalfSpaceSign")
        .value("Plus", HalfSpaceSign::Plus)
        .value("Minus", HalfSpaceSign::Minus);
    py::class_<ProperPairState>(m, "ProperPairState")
        .def_readwrite("c", &ProperPairState::c)
        .def_readwrite("b", &ProperPairState::b)
        .def("b_len", &ProperPairState::b_len)
        .def("rho_b", &ProperPairState::rho_b);
    py::class_<FrameVectors>(m, "FrameVectors")
        .def_readwrite("f", &FrameVectors::f)
        .def_readwrite("e_f", &FrameVectors::e_f);

    m.def("half_space_of", &half_space_of, py::arg("b3"));
    m.def("pair_from_eta", &pair_from_eta, py::arg("s"));
    m.def("frame_from_params", &frame_from_params, py::arg("N"), py::arg("M"),
          py::arg("gamma"), py::arg("kappa"));
    m.def("eta_from_proper", &eta_from_proper, py::arg("b"),
          py::arg("ctx") = BranchContext{}, py::arg("sheet") = 1);

    // ----- model map --------------------------------------------------------
    m.def("xi_to_eta", &xi_to_eta, py::arg("xi"));
    m.def("eta_to_xi", &eta_to_xi, py::arg("eta"));

    // ----- charts -----------------------------------------------------------
    py::enum_<ChartId>(m, "ChartId")
        .value("CylindricalParabolic", ChartId::CylindricalParabolic)
        .value("Parabolic", ChartId::Parabolic)
        .value("Spherical", ChartId::Spherical);
    py::enum_<DomainVariant>(m, "DomainVariant")
        .value("VectorG", DomainVariant::VectorG)
        .value("ExtendedG", DomainVariant::ExtendedG)
        .value("SphericalGPrime", DomainVariant::SphericalGPrime)
        .value("SphericalGDoublePrime", DomainVariant::SphericalGDoublePrime);
    py::enum_<SheetIndex>(m, "SheetIndex")
        .value("One", SheetIndex::One)
        .value("Two", SheetIndex::Two);
    py::enum_<DirectionMultiplicity>(m, "DirectionMultiplicity")
        .value("TwoPi", DirectionMultiplicity::TwoPi)
        .value("FourPi", DirectionMultiplicity::FourPi);

    py::class_<ChartPoint>(m, "ChartPoint")
        .def(py::init([](ChartId chart, double y1, double y2, double y3,
                         DomainVariant variant) {
                 return ChartPoint{chart, y1, y2, y3, variant};
             }),
             py::arg("chart"), py::arg("y1"), py::arg("y2"), py::arg("y3"),
             py::arg("variant") = DomainVariant::VectorG)
        .def_readwrite("chart", &ChartPoint::chart)
        .def_readwrite("y1", &ChartPoint::y1)
        .def_readwrite("y2", &ChartPoint::y2)
        .def_readwrite("y3", &ChartPoint::y3)
        .def_readwrite("variant", &ChartPoint::variant);

    py::class_<DirectionNeighborhood>(m, "DirectionNeighborhood")
        .def_readonly("multiplicity", &DirectionNeighborhood::multiplicity)
        .def_readonly("delta_shift", &DirectionNeighborhood::delta_shift);

    m.def("to_cartesian", &to_cartesian, py::arg("p"));
    m.def(
        "metric", [](const ChartPoint& p) { return mat3_rows(metric(p)); }, py::arg("p"));
    m.def("xi_in_chart", &xi_in_chart, py::arg("p"), py::arg("ctx") = BranchContext{});
    m.def("eta_in_chart", &eta_in_chart, py::arg("p"), py::arg("ctx") = BranchContext{});
    m.def("antipode", &antipode, py::arg("p"));
    m.def("sheet_of", &sheet_of, py::arg("p"));
    m.def("convert_spherical_domain", &convert_spherical_domain, py::arg("p"),
          py::arg("target"));
    m.def("direction_multiplicity", &direction_multiplicity, py::arg("p"));

    // ----- calculus ---------------------------------------------------------
    py::enum_<Model>(m, "Model").value("Xi", Model::Xi).value("Eta", Model::Eta);
    py::class_<Direction2>(m, "Direction2")
        .def(py::init<double, double>(), py::arg("n1"), py::arg("n2"))
        .def_readonly("n1", &Direction2::n1)
        .def_readonly("n2", &Direction2::n2);
    py::class_<ApproachDirection>(m, "ApproachDirection")
        .def(py::init<double, double>(), py::arg("m1"), py::arg("m2"))
        .def_readonly("m1", &ApproachDirection::m1)
        .def_readonly("m2", &ApproachDirection::m2)
        .def("mu", &ApproachDirection::mu);
    py::class_<DirectionalDerivative>(m, "DirectionalDerivative")
        .def_readonly("d1", &DirectionalDerivative::d1)
        .def_readonly("d2", &DirectionalDerivative::d2);
    py::class_<CRResidual>(m, "CRResidual")
        .def_readonly("D1", &CRResidual::D1)
        .def_readonly("D2", &CRResidual::D2)
        .def_readonly("D3", &CRResidual::D3)
        .def_readonly("D4", &CRResidual::D4);
    py::class_<AsymptoticDerivative>(m, "AsymptoticDerivative")
        .def_readonly("k_minus", &AsymptoticDerivative::k_minus)
        .def_readonly("k_zero", &AsymptoticDerivative::k_zero)
        .def_readonly("k_plus", &AsymptoticDerivative::k_plus)
        .def_readonly("lead_power", &AsymptoticDerivative::lead_power)
        .def_readonly("valid_eps", &AsymptoticDerivative::valid_eps)
        .def("evaluate", &AsymptoticDerivative::evaluate, py::arg("component"),
             py::arg("eps"));

    m.def(
        "grad_xi",
        [](const PseudoVectorState& v) {
            GradTable t = grad_xi(v);
            return std::vector<std::vector<Complex>>{{t.d[0][0], t.d[0][1]},
                                                     {t.d[1][0], t.d[1][1]}};
        },
        py::arg("v"));
    m.def(
        "grad_eta",
        [](const Vec3& b) {
            GradTable t = grad_eta(b);
            return std::vector<std::vector<Complex>>{{t.d[0][0], t.d[0][1]},
                                                     {t.d[1][0], t.d[1][1]}};
        },
        py::arg("b"));
    m.def("dir_deriv_xi", &dir_deriv_xi, py::arg("v"), py::arg("n"));
    m.def("dir_deriv_eta", &dir_deriv_eta, py::arg("b"), py::arg("n"));
    m.def(
        "connection_matrix",
        [](const PseudoVectorState& v, const Direction2& n) {
            return mat2_rows(connection_matrix(v, n));
        },
        py::arg("v"), py::arg("n"));
    m.def("cr_residual_xi", &cr_residual_xi, py::arg("v"));
    m.def("cr_residual_eta", &cr_residual_eta, py::arg("b"), py::arg("sigma"));
    m.def("singular_dir_deriv", &singular_dir_deriv, py::arg("region"), py::arg("anchor"),
          py::arg("model"), py::arg("n"), py::arg("m"));
    m.def("singular_dir_deriv_at_infinity", &singular_dir_deriv_at_infinity,
          py::arg("model"), py::arg("anchor_x3"), py::arg("n"), py::arg("m"));
    m.def("chart_dir_deriv", &chart_dir_deriv, py::arg("p"), py::arg("model"),
          py::arg("nu"), py::arg("ctx") = BranchContext{});

    // ----- transport --------------------------------------------------------
    py::class_<Path>(m, "Path")
        .def(py::init([](const std::vector<Vec3>& points, bool closed) {
                 return Path{points, closed};
             }),
             py::arg("points"), py::arg("closed") = false)
        .def_readwrite("points", &Path::points)
        .def_readwrite("closed", &Path::closed);
    py::class_<TransportResult>(m, "TransportResult")
        .def_readonly("final", &TransportResult::final)
        .def_readonly("gamma_end", &TransportResult::gamma_end)
        .def_readonly("winding", &TransportResult::winding)
        .def_readonly("sign_flip", &TransportResult::sign_flip);

    m.def("continue_gamma", &continue_gamma, py::arg("path"), py::arg("axis_tol") = 1e-12);
    m.def("transport_spinor", &transport_spinor, py::arg("path"), py::arg("model"),
          py::arg("ctx") = BranchContext{});
    m.def("winding", &winding, py::arg("path"), py::arg("axis_tol") = 1e-12);

    // ----- checks -----------------------------------------------------------
    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("max_err", &CheckResult::max_err)
        .def_readonly("tol", &CheckResult::tol)
        .def_readonly("ok", &CheckResult::pass)
        .def("__repr__", [](const CheckResult& r) {
            std::ostringstream os;
            os << (r.pass ? "PASS " : "FAIL ") << r.name << " max_err=" << r.max_err;
            return os.str();
        });
    m.def(
        "run_check_suite",
        [](const std::string& suite, std::uint64_t seed) {
            CheckOptions opt;
            opt.seed = seed;
            return run_check_suite(suite, opt);
        },
        py::arg("suite"), py::arg("seed") = 0x5EEDF00Dull);
    m.def("check_suites", []() { return check_suites(); });
}
