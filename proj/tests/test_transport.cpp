#include <doctest.h>

#include <cmath>

#include "spinor3/checks.hpp"
#include "spinor3/transport.hpp"
#include "test_util.hpp"

using namespace spinor3;
using testutil::check_close;

namespace {
const BranchContext kCtx{};

Path circle(int points, int turns, double radius = 1.0, double height = 0.0) {
    Path p;
    p.closed = true;
    const int total = points * std::abs(turns);
    for (int i = 0; i < total; ++i) {
        const double t = kTwoPi * turns * double(i) / double(total);
        p.points.push_back({radius * std::cos(t), radius * std::sin(t), height});
    }
    return p;
}
}  // namespace

TEST_CASE("gamma lift") {
    // nearest-translate rule across the principal seam
    Path p;
    p.points = {{std::cos(3.0), std::sin(3.0), 0}, {std::cos(3.3), std::sin(3.3), 0}};
    std::vector<double> lift = continue_gamma(p);
    check_close(lift[0], 3.0);
    check_close(lift[1], 3.3);

    // stationary path keeps a constant lift
    Path stat;
    stat.points = {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}};
    lift = continue_gamma(stat);
    check_close(lift[0], lift[1]);
    check_close(lift[1], lift[2]);

    // closed unit circle: the closing entry lands at start + 2pi
    lift = continue_gamma(circle(8, 1));
    CHECK(lift.size() == 9);
    check_close(lift.back(), lift.front() + kTwoPi);
}

TEST_CASE("lift validation") {
    Path coarse;
    coarse.points = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}};  // pi/2 jumps
    CHECK_THROWS_AS(continue_gamma(coarse), ResolutionError);

    Path axis;
    axis.points = {{1, 0, 0}, {0, 0, 0.5}};
    CHECK_THROWS_AS(continue_gamma(axis), SingularPointError);

    Path empty;
    CHECK_THROWS_AS(continue_gamma(empty), ValidationError);
}

TEST_CASE("transport around the axis") {
    // one revolution flips the sign of xi
    TransportResult once = transport_spinor(circle(100, 1), Model::Xi, kCtx);
    CHECK(once.winding.value() == 1);
    CHECK(once.sign_flip);
    check_close(once.final, {{-1, 0}, {-1, 0}}, 1e-9);

    // two revolutions restore it
    TransportResult twice = transport_spinor(circle(100, 2), Model::Xi, kCtx);
    CHECK(twice.winding.value() == 2);
    CHECK(!twice.sign_flip);
    check_close(twice.final, {{1, 0}, {1, 0}}, 1e-9);

    // stationary path returns the initial spinor
    Path stat;
    stat.closed = true;
    stat.points = {{1, 0, 0}, {1, 0, 0}};
    TransportResult fixed = transport_spinor(stat, Model::Xi, kCtx);
    CHECK(fixed.winding.value() == 0);
    check_close(fixed.final, {{1, 0}, {1, 0}});

    // open path: winding is absent, the final spinor is present
    Path open;
    open.points = {{1, 0, 0}, {1, 0.2, 0}};
    TransportResult o = transport_spinor(open, Model::Xi, kCtx);
    CHECK(!o.winding.has_value());
    CHECK(std::abs(o.final.c1) > 0.9);
}

TEST_CASE("winding numbers") {
    CHECK(winding(circle(64, 1)) == 1);
    CHECK(winding(circle(64, -1)) == -1);
    CHECK(winding(circle(64, 2)) == 2);

    Path small = circle(64, 1, 0.3);
    for (Vec3& p : small.points) p.x += 2.0;  // not enclosing the axis
    CHECK(winding(small) == 0);

    Path open;
    open.points = {{1, 0, 0}, {1, 1, 0}};
    CHECK_THROWS_AS(winding(open), ValidationError);
}

TEST_CASE("transport invariant suite") {
    for (const CheckResult& r : run_check_suite("transport", CheckOptions{})) {
        INFO(r.name, " max_err=", r.max_err);
        CHECK(r.pass);
    }
}
