#include <doctest.h>

#include "spinor3/algebra.hpp"
#include "spinor3/checks.hpp"
#include "spinor3/pseudo_model.hpp"
#include "test_util.hpp"

using namespace spinor3;
using testutil::check_close;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("su2 matrix of basic elements") {
    Mat2c id = su2_matrix(group_identity());
    check_close(id(0, 0), {1, 0});
    check_close(id(0, 1), {0, 0});
    check_close(id(1, 1), {1, 0});

    Mat2c z = su2_matrix({0.0, {0, 0, 1}});
    check_close(z(0, 0), -I);
    check_close(z(1, 1), I);
    check_close(z(0, 1), {0, 0});

    Mat2c y = su2_matrix({0.0, {0, 1, 0}});
    check_close(y(0, 0), {0, 0});
    check_close(y(0, 1), {-1, 0});
    check_close(y(1, 0), {1, 0});
    check_close(y(1, 1), {0, 0});
}

TEST_CASE("su2 matrix rejects non-unit elements") {
    CHECK_THROWS_AS(su2_matrix({0.7, {0.7, 0.7, 0.0}}), ValidationError);
}

TEST_CASE("so3 matrix of basic elements") {
    Mat3 id = so3_matrix(group_identity());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) check_close(id(i, j), i == j ? 1.0 : 0.0);

    // z half-turn: sign convention fixed by hermitian-square covariance
    Mat3 z = so3_matrix({0.0, {0, 0, 1}});
    check_close(z(0, 0), -1.0);
    check_close(z(1, 1), -1.0);
    check_close(z(2, 2), 1.0);
    check_close(z(0, 1), 0.0);

    GroupElement g{0.6, {0.0, 0.8, 0.0}};
    GroupElement neg{-0.6, {0.0, -0.8, 0.0}};
    Mat3 a = so3_matrix(g), b = so3_matrix(neg);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a(i, j) == b(i, j));
}

TEST_CASE("composition") {
    GroupElement g{0.5, {0.5, 0.5, 0.5}};
    GroupElement gi = compose(g, group_identity());
    check_close(gi.n0, g.n0);
    check_close(gi.n, g.n);

    GroupElement inv = compose(g, inverse(g));
    check_close(inv.n0, 1.0);
    check_close(inv.n, {0, 0, 0});

    GroupElement half{0.0, {0, 0, 1}};
    GroupElement full = compose(half, half);
    check_close(full.n0, -1.0);
    check_close(full.n, {0, 0, 0});

    GroupElement j{1.0, {0, 0, 0}, Parity::Reflected};
    CHECK(compose(j, j).parity == Parity::Proper);
    CHECK(compose(j, g).parity == Parity::Reflected);
}

TEST_CASE("spinor and vector actions") {
    Spinor s{{1, 0}, {1, 0}};
    check_close(act_on_spinor(group_identity(), s), s);
    check_close(act_on_spinor({0.0, {0, 0, 1}}, s), {-I, I});
    check_close(act_on_vector({0.0, {0, 0, 1}}, {1, 0, 0}), {-1, 0, 0});
    check_close(act_on_vector(group_identity(), {2, -3, 5}), {2, -3, 5});
}

TEST_CASE("parity action on the two spinor types") {
    Spinor s{{1, 0}, {0, 0}};
    check_close(parity_on_spinor(SpinorType::T1, s), {I, {0, 0}});
    check_close(parity_on_spinor(SpinorType::T2, s), {-I, {0, 0}});

    Spinor t{{0.3, -0.4}, {1.1, 0.8}};
    Spinor twice = parity_on_spinor(SpinorType::T1, parity_on_spinor(SpinorType::T1, t));
    check_close(twice, -t);

    // the pseudo vector is insensitive to the reflection
    auto [a0, v0] = pseudo_from_xi(t);
    auto [a1, v1] = pseudo_from_xi(parity_on_spinor(SpinorType::T1, t));
    check_close(a0, a1);
    check_close(v0, v1);
}

TEST_CASE("algebra invariant suite") {
    for (const CheckResult& r : run_check_suite("algebra", CheckOptions{})) {
        INFO(r.name, " max_err=", r.max_err);
        CHECK(r.pass);
    }
}
