#include <doctest.h>

#include <cmath>

#include "spinor3/checks.hpp"
#include "spinor3/pseudo_model.hpp"
#include "test_util.hpp"

using namespace spinor3;
using testutil::check_close;

namespace {
const double R2 = std::sqrt(2.0) / 2.0;
const BranchContext kCtx{};
}  // namespace

TEST_CASE("region taxonomy") {
    CHECK(classify_region({0, 0, 1}, kCtx) == RegionTag::AxisPlus);
    CHECK(classify_region({0, 0, -3}, kCtx) == RegionTag::AxisMinus);
    CHECK(classify_region({0, 0, 0}, kCtx) == RegionTag::Origin);
    CHECK(classify_region({1, 0, 0}, kCtx) == RegionTag::Cut);  // cut wins over plane
    CHECK(classify_region({1, 0, 2}, kCtx) == RegionTag::Cut);
    CHECK(classify_region({-1, 0, 0}, kCtx) == RegionTag::Plane);
    CHECK(classify_region({1, 2, 0}, kCtx) == RegionTag::Plane);
    CHECK(classify_region({1, 2, 3}, kCtx) == RegionTag::InteriorPlus);
    CHECK(classify_region({1, 2, -3}, kCtx) == RegionTag::InteriorMinus);
}

TEST_CASE("xi from pseudo vector") {
    // axis with mute angle 0
    check_close(xi_from_pseudo({0, 0, 2}, kCtx), {{2, 0}, {0, 0}});
    // plane, gamma = 0
    check_close(xi_from_pseudo({1, 0, 0}, kCtx), {{1, 0}, {1, 0}});
    // gamma = pi/2
    check_close(xi_from_pseudo({0, 1, 0}, kCtx), {{R2, -R2}, {R2, R2}});
    // origin maps to the zero spinor
    check_close(xi_from_pseudo({0, 0, 0}, kCtx), {{0, 0}, {0, 0}});
    // negative axis
    check_close(xi_from_pseudo({0, 0, -2}, kCtx), {{0, 0}, {2, 0}});

    BranchContext gamma_ctx;
    gamma_ctx.gamma_axis = kPi;
    check_close(xi_from_pseudo({0, 0, 2}, gamma_ctx), {{0, -2}, {0, 0}});
}

TEST_CASE("pseudo vector from xi") {
    auto [a1, v1] = pseudo_from_xi({{1, 0}, {0, 0}});
    check_close(a1, 0.5);
    check_close(v1, {0, 0, 0.5});

    auto [a2, v2] = pseudo_from_xi({{1, 0}, {1, 0}});
    check_close(a2, 1.0);
    check_close(v2, {1, 0, 0});

    auto [a3, v3] = pseudo_from_xi({{2, 0}, {0, 0}});
    check_close(a3, 2.0);
    check_close(v3, {0, 0, 2});

    // reconstruction oracle for the gamma = pi/2 example
    auto [a4, v4] = pseudo_from_xi(xi_from_pseudo({0, 1, 0}, kCtx));
    check_close(a4, 1.0);
    check_close(v4, {0, 1, 0});
}

TEST_CASE("polar parameterization") {
    PolarSpinorParams unit{1, 1, 0, 0, false, false};
    check_close(xi_from_polar(unit), {{1, 0}, {1, 0}});

    PolarSpinorParams quarter{1, 1, -kPi / 2, kPi / 2, false, false};
    check_close(quarter.kappa(), 0.0);
    check_close(quarter.gamma(), kPi);
    check_close(xi_from_polar(quarter), {{0, -1}, {0, 1}});

    // kappa = 2pi phase factor flips the overall sign
    PolarSpinorParams full{1, 1, kPi, kPi, false, false};
    Spinor with_phase = xi_from_polar(full, true);
    Spinor without = xi_from_polar(full, false);
    check_close(with_phase, -without);

    PolarSpinorParams p = polar_from_xi({{1, 0}, {1, 0}});
    check_close(p.N, 1.0);
    check_close(p.M, 1.0);
    check_close(p.n, 0.0);
    check_close(p.m, 0.0);
    CHECK(!p.n_mute);

    PolarSpinorParams q = polar_from_xi(
        {std::polar(2.0, -kPi / 4), std::polar(3.0, kPi / 4)});
    check_close(q.N, 2.0);
    check_close(q.M, 3.0);
    check_close(q.gamma(), kPi / 2);
    check_close(q.kappa(), 0.0);

    PolarSpinorParams mute = polar_from_xi({{0, 0}, {5, 0}});
    check_close(mute.N, 0.0);
    CHECK(mute.n_mute);
    CHECK(!mute.m_mute);
}

TEST_CASE("gamma branch windows") {
    // principal vector branch lives in [0, 2pi)
    const PseudoVectorState below{1.0, -1e-3, 0.5};
    const double g = gamma_of(below, kCtx);
    CHECK(g > kPi);
    CHECK(g < kTwoPi);

    // extended branch: second sheet offsets by 2pi
    BranchContext ext = kCtx;
    ext.mode = GammaMode::PrincipalExtended;
    check_close(gamma_of(below, ext, 2) - gamma_of(below, ext, 1), kTwoPi);
    check_close(xi_from_pseudo(below, ext, 2), -xi_from_pseudo(below, ext, 1));
}

TEST_CASE("near-axis components keep full relative precision") {
    // a - a3 cancels catastrophically near the positive axis when formed
    // naively; the second component must still be accurate in relative terms.
    const PseudoVectorState v{1e-9, 1e-9, 2.0};
    const Spinor xi = xi_from_pseudo(v, kCtx);
    const double rho = v.rho();
    const double expected = rho / std::sqrt(v.a() + v.a3);
    CHECK(std::abs(std::abs(xi.c2) - expected) <= 1e-12 * expected);

    auto [a, back] = pseudo_from_xi(xi);
    CHECK(std::abs(back.x - v.a1) <= 1e-12 * v.a1);
    CHECK(std::abs(back.y - v.a2) <= 1e-12 * v.a2);
    (void)a;
}

TEST_CASE("pseudo invariant suite") {
    for (const CheckResult& r : run_check_suite("pseudo", CheckOptions{})) {
        INFO(r.name, " max_err=", r.max_err);
        CHECK(r.pass);
    }
}
