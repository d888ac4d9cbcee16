#include <doctest.h>

#include <cmath>
#include <random>

#include "spinor3/calculus.hpp"
#include "spinor3/checks.hpp"
#include "spinor3/fd.hpp"
#include "test_util.hpp"

using namespace spinor3;
using testutil::check_close;

namespace {
const Complex I{0.0, 1.0};
const BranchContext kCtx{};
const double RT2 = std::sqrt(2.0);

Spinor fd_partial_xi(const Vec3& x, int j) {
    const double gref = gamma_of(PseudoVectorState{x}, kCtx);
    auto f = [&](const Vec3& y) { return fd::xi_lifted(y, gref, kCtx); };
    return fd::central_diff(f, x, j, fd::step(x.norm()));
}

}  // namespace

TEST_CASE("2-gradient of xi at a plane point") {
    GradTable t = grad_xi({1, 0, 0});
    // frozen from the central-difference oracle
    check_close(t.d[0][0], {0.5, 0});
    check_close(t.d[0][1], -0.5 * I);
    check_close(t.d[1][0], {0.5, 0});
    check_close(t.d[1][1], 0.5 * I);

    CHECK_THROWS_AS(grad_xi({0, 0, 1}), SingularPointError);
    CHECK_THROWS_AS(grad_xi({0, 0, 0}), SingularPointError);
}

TEST_CASE("2-gradient of xi against the difference oracle off the plane") {
    const Vec3 x{3, 0, 4};
    GradTable t = grad_xi(PseudoVectorState{x});
    // frozen oracle values: (0.1, -i/2; 0.3, i/6)
    check_close(t.d[0][0], {0.1, 0});
    check_close(t.d[0][1], -0.5 * I);
    check_close(t.d[1][0], {0.3, 0});
    check_close(t.d[1][1], I / 6.0);
    for (int j = 0; j < 2; ++j) {
        Spinor num = fd_partial_xi(x, j);
        CHECK(std::abs(t.d[0][j] - num.c1) < 1e-6);
        CHECK(std::abs(t.d[1][j] - num.c2) < 1e-6);
    }
}

TEST_CASE("directional derivative of xi") {
    DirectionalDerivative d1 = dir_deriv_xi({1, 0, 0}, {0, 1});
    check_close(d1.d1, -0.5 * I);
    check_close(d1.d2, 0.5 * I);

    DirectionalDerivative d2 = dir_deriv_xi({1, 0, 0}, {1, 0});
    check_close(d2.d1, {0.5, 0});
    check_close(d2.d2, {0.5, 0});

    // perpendicular direction: purely imaginary logarithmic derivative, so
    // the modulus is stationary
    const Vec3 x{0.6, 1.1, -0.4};
    const double rho = std::hypot(x.x, x.y);
    Direction2 perp{-x.y / rho, x.x / rho};
    const double eps = 1e-6;
    BranchContext lift = kCtx;
    lift.mode = GammaMode::RealLift;
    lift.gamma_lift = gamma_of(PseudoVectorState{x}, kCtx);
    Spinor base = xi_from_pseudo(PseudoVectorState{x}, lift);
    Vec3 moved{x.x + eps * perp.n1, x.y + eps * perp.n2, x.z};
    lift.gamma_lift = gamma_of(PseudoVectorState{x}, kCtx);
    Spinor shifted = fd::xi_lifted(moved, lift.gamma_lift, kCtx);
    CHECK(std::abs(std::abs(shifted.c1) - std::abs(base.c1)) < 1e-10);
    CHECK(std::abs(std::abs(shifted.c2) - std::abs(base.c2)) < 1e-10);
}

TEST_CASE("directional derivative of eta") {
    DirectionalDerivative d = dir_deriv_eta({1, 0, 0}, {1, 0});
    check_close(d.d1, {0, 0});
    check_close(d.d2, {RT2 / 2, 0});

    // eta1 vanishes identically on the plane, so its in-plane gradient is 0
    GradTable t = grad_eta({1, 0, 0});
    check_close(t.d[0][0], {0, 0});
    check_close(t.d[0][1], {0, 0});

    CHECK_THROWS_AS(dir_deriv_eta({0, 0, 1}, {1, 0}), SingularPointError);
}

TEST_CASE("connection matrix") {
    Mat2c a1 = connection_matrix({1, 0, 0}, {1, 0});
    check_close(a1(0, 0), {0.5, 0});
    check_close(a1(1, 1), {0.5, 0});
    check_close(a1(0, 1), {0, 0});

    Mat2c a2 = connection_matrix({1, 0, 0}, {0, 1});
    check_close(a2(0, 0), -0.5 * I);
    check_close(a2(1, 1), 0.5 * I);

    // A xi = dir_deriv by construction; checked numerically at random safe points
    std::mt19937_64 rng(41);
    auto uni = [&](double lo, double hi) {
        return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
    };
    for (int i = 0; i < 50; ++i) {
        const double rho = uni(0.4, 2.5), ang = uni(0.05, kTwoPi - 0.05);
        const PseudoVectorState v{rho * std::cos(ang), rho * std::sin(ang), uni(-2.0, 2.0)};
        const double t = uni(0.0, kTwoPi);
        const Direction2 n{std::cos(t), std::sin(t)};
        Mat2c a = connection_matrix(v, n);
        Spinor xi = xi_from_pseudo(v, kCtx);
        DirectionalDerivative d = dir_deriv_xi(v, n);
        check_close(a(0, 0) * xi.c1, d.d1);
        check_close(a(1, 1) * xi.c2, d.d2);
        check_close(a(0, 1), {0, 0});
        check_close(a(1, 0), {0, 0});
    }
}

TEST_CASE("modified Cauchy-Riemann residuals of xi") {
    CRResidual r = cr_residual_xi({1, 0, 0});
    check_close(r.D1, 1.0);
    check_close(r.D2, 0.0);
    check_close(r.D3, 0.0);
    check_close(r.D4, 0.0);

    // component 2 residuals vanish on the whole plane
    CRResidual rp = cr_residual_xi({-0.4, 1.7, 0});
    check_close(rp.D3, 0.0, 1e-10);
    check_close(rp.D4, 0.0, 1e-10);

    // frozen closed-form values at (3,0,4), matched against the oracle
    CRResidual r34 = cr_residual_xi({3, 0, 4});
    check_close(r34.D1, 0.6);
    check_close(r34.D2, 0.0);
    check_close(r34.D3, 0.4 / 3.0);
    check_close(r34.D4, 0.0);
    Spinor g1 = fd_partial_xi({3, 0, 4}, 0);
    Spinor g2 = fd_partial_xi({3, 0, 4}, 1);
    CHECK(std::abs(r34.D1 - (g1.c1.real() - g2.c1.imag())) < 1e-6);
    CHECK(std::abs(r34.D2 - (g2.c1.real() + g1.c1.imag())) < 1e-6);
    CHECK(std::abs(r34.D3 - (g1.c2.real() - g2.c2.imag())) < 1e-6);
    CHECK(std::abs(r34.D4 - (g2.c2.real() + g1.c2.imag())) < 1e-6);

    CHECK_THROWS_AS(cr_residual_xi({0, 0, 2}), SingularPointError);
}

TEST_CASE("modified Cauchy-Riemann residuals of eta") {
    // residuals vanish on the plane b3 = 0
    CRResidual r0 = cr_residual_eta({1, 0, 0}, HalfSpaceSign::Plus);
    check_close(r0.D1, 0.0, 1e-10);
    check_close(r0.D2, 0.0, 1e-10);
    check_close(r0.D3, 0.0, 1e-10);
    check_close(r0.D4, 0.0, 1e-10);

    // frozen closed-form values at (3,0,4)
    CRResidual r = cr_residual_eta({3, 0, 4}, HalfSpaceSign::Plus);
    check_close(r.D1, RT2 * (2.0 / 15.0) / 2.0 * 3.0 / 3.0 * 3.0 / 3.0, 1e-9);
    check_close(r.D1, 0.0942809041582063, 1e-14);
    check_close(r.D2, 0.0);
    check_close(r.D3, -0.188561808316413, 1e-14);
    check_close(r.D4, 0.0);

    // residuals die off toward the infinite planar boundary
    CRResidual far = cr_residual_eta({1e6, 0.3, 3.0}, HalfSpaceSign::Plus);
    CHECK(std::abs(far.D1) < 1e-8);
    CHECK(std::abs(far.D2) < 1e-8);
    CHECK(std::abs(far.D3) < 1e-8);
    CHECK(std::abs(far.D4) < 1e-8);
}

TEST_CASE("asymptotics at the positive axis") {
    // frozen: component-1 leading coefficient (i/2) e^{-i pi/4} at a3 = 1/2,
    // n = (1,0), m = (0,1)
    AsymptoticDerivative a =
        singular_dir_deriv(RegionTag::AxisPlus, {0, 0, 0.5}, Model::Xi, {1, 0}, {0, 1});
    check_close(a.k_minus[0], 0.5 * I * std::polar(1.0, -kPi / 4));
    check_close(a.k_zero[0], {0, 0});
    check_close(a.k_minus[1], {0, 0});

    // numerical-limit oracle at eps in {1e-4, 1e-5}
    for (double eps : {1e-4, 1e-5}) {
        DirectionalDerivative num = dir_deriv_xi({0.0, eps, 0.5}, {1, 0});
        check_close(a.evaluate(0, eps), num.d1, 1e-3 * std::abs(num.d1));
        check_close(a.evaluate(1, eps), num.d2, 1e-3 * std::abs(num.d2));
    }

    CHECK_THROWS_AS(
        singular_dir_deriv(RegionTag::AxisPlus, {0, 0, 0.5}, Model::Xi, {1, 0}, {1, 0}),
        ValidationError);
    CHECK_THROWS_AS(
        singular_dir_deriv(RegionTag::Plane, {1, 1, 0}, Model::Xi, {1, 0}, {0, 1}),
        ValidationError);
}

TEST_CASE("asymptotics at the cut") {
    // frozen: grad along the cut anchor (1,0,0) is (1/2) sgn(m2) (n1 - i n2)
    const Direction2 n{0.6, 0.8};
    AsymptoticDerivative up =
        singular_dir_deriv(RegionTag::Cut, {1, 0, 0}, Model::Xi, n, {0, 1});
    check_close(up.k_zero[0], 0.5 * Complex{n.n1, -n.n2});
    AsymptoticDerivative down =
        singular_dir_deriv(RegionTag::Cut, {1, 0, 0}, Model::Xi, n, {0, -1});
    check_close(down.k_zero[0], -0.5 * Complex{n.n1, -n.n2});
    check_close(down.k_zero[1], -up.k_zero[1]);

    for (double eps : {1e-4, 1e-5}) {
        DirectionalDerivative num = dir_deriv_xi({1.0, eps, 0.0}, n);
        check_close(up.evaluate(0, eps), num.d1, 1e-3 * std::abs(num.d1));
    }

    CHECK_THROWS_AS(
        singular_dir_deriv(RegionTag::Cut, {1, 0, 0}, Model::Xi, n, {-1, 0}),
        ValidationError);
}

TEST_CASE("asymptotics at the in-plane origin") {
    const Direction2 n{0.6, 0.8};
    const ApproachDirection m{std::cos(2.0), std::sin(2.0)};
    // eta component 1 is identically zero there
    AsymptoticDerivative e =
        singular_dir_deriv(RegionTag::Origin, {0, 0, 0}, Model::Eta, n, m);
    check_close(e.k_minus[0], {0, 0});
    check_close(e.k_zero[0], {0, 0});
    CHECK(e.lead_power == -0.5);

    // xi expansion is exact at every eps on the plane
    AsymptoticDerivative x =
        singular_dir_deriv(RegionTag::Origin, {0, 0, 0}, Model::Xi, n, m);
    for (double eps : {1e-4, 1e-2}) {
        DirectionalDerivative num =
            dir_deriv_xi({eps * m.m1, eps * m.m2, 0.0}, n);
        check_close(x.evaluate(0, eps), num.d1, 1e-10);
        check_close(x.evaluate(1, eps), num.d2, 1e-10);
    }
}

TEST_CASE("asymptotics at the infinite boundary") {
    const Direction2 n{0.6, 0.8};
    const ApproachDirection m{std::cos(2.4), std::sin(2.4)};
    AsymptoticDerivative a = singular_dir_deriv_at_infinity(Model::Xi, 1.5, n, m);
    CHECK(a.lead_power == 0.5);
    for (double eps : {1e-5, 1e-6}) {
        const double omega = 1.0 / eps;
        DirectionalDerivative num =
            dir_deriv_xi({omega * m.m1, omega * m.m2, 1.5}, n);
        check_close(a.evaluate(0, eps), num.d1, 1e-3 * std::abs(num.d1));
        check_close(a.evaluate(1, eps), num.d2, 1e-3 * std::abs(num.d2));
    }

    // eta: component 2 carries the whole leading order
    AsymptoticDerivative e = singular_dir_deriv_at_infinity(Model::Eta, 1.5, n, m);
    check_close(e.k_minus[0], {0, 0});
    for (double eps : {1e-5, 1e-6}) {
        const double omega = 1.0 / eps;
        DirectionalDerivative num = dir_deriv_eta({omega * m.m1, omega * m.m2, 1.5}, n);
        check_close(e.evaluate(1, eps), num.d2, 1e-3 * std::abs(num.d2));
        CHECK(std::abs(num.d1) < 1e-6);
    }
}

TEST_CASE("chart directional derivative") {
    ChartPoint p{ChartId::CylindricalParabolic, 1, 1, 0, DomainVariant::ExtendedG};
    DirectionalDerivative d = chart_dir_deriv(p, Model::Xi, {1, 0}, kCtx);
    // frozen: (xi1/2)(1+i) = sqrt(2)/2 at this point
    check_close(d.d1, {RT2 / 2, 0});
    check_close(d.d2, {RT2 / 2, 0});

    // nu parallel to (y1, y2): the logarithmic derivative is real
    DirectionalDerivative dpar = chart_dir_deriv(p, Model::Xi, {1, 1}, kCtx);
    Spinor xi = xi_in_chart(p, kCtx);
    check_close((dpar.d1 / xi.c1).imag(), 0.0);
    check_close((dpar.d2 / xi.c2).imag(), 0.0);

    ChartPoint origin{ChartId::CylindricalParabolic, 0, 0, 3, DomainVariant::ExtendedG};
    CHECK_THROWS_AS(chart_dir_deriv(origin, Model::Xi, {1, 0}, kCtx), SingularPointError);

    ChartPoint wrong{ChartId::Spherical, 1, 1, 0, DomainVariant::VectorG};
    CHECK_THROWS_AS(chart_dir_deriv(wrong, Model::Xi, {1, 0}, kCtx), ValidationError);
}

TEST_CASE("calculus invariant suite") {
    for (const CheckResult& r : run_check_suite("calculus", CheckOptions{})) {
        INFO(r.name, " max_err=", r.max_err);
        CHECK(r.pass);
    }
}
