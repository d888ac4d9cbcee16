#include <doctest.h>

#include <cmath>

#include "spinor3/checks.hpp"
#include "spinor3/proper_model.hpp"
#include "test_util.hpp"

using namespace spinor3;
using testutil::check_close;

namespace {
const BranchContext kCtx{};
const double RT2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("vector pair of a spinor") {
    ProperPairState p1 = pair_from_eta({{0, 0}, {RT2, 0}});
    check_close(p1.c, {0, 1, 0});
    check_close(p1.b, {1, 0, 0});

    ProperPairState p2 = pair_from_eta({{1, 0}, {1, 0}});
    check_close(p2.c, {0, 1, 0});
    check_close(p2.b, {0, 0, 1});

    ProperPairState p3 = pair_from_eta({{0, 0}, {0, 0}});
    check_close(p3.c, {0, 0, 0});
    check_close(p3.b, {0, 0, 0});
}

TEST_CASE("frame vectors") {
    auto [fr, pair] = frame_from_params(1.0, 2.0, 0.0, 0.0);
    check_close(fr.f, {1.5, 0, 2});
    check_close(fr.e_f, {0, 2.5, 0});
    check_close(pair.b, fr.f);
    check_close(pair.c, fr.e_f);
    check_close(fr.f.norm(), 2.5);
    check_close(fr.e_f.norm(), 2.5);

    // M = N collapses the planar part; gamma is mute
    auto [fr2, pair2] = frame_from_params(1.3, 1.3, 0.77, 0.0);
    check_close(fr2.f, {0, 0, 1.3 * 1.3});

    // kappa = pi reverses the pair
    auto [fr3, pair3] = frame_from_params(1.0, 2.0, 0.4, kPi);
    check_close(pair3.b, -fr3.f);
    check_close(pair3.c, -fr3.e_f);

    CHECK_THROWS_AS(frame_from_params(-1.0, 2.0, 0, 0), ValidationError);
}

TEST_CASE("eta from proper vector") {
    check_close(eta_from_proper({1, 0, 0}, kCtx), {{0, 0}, {RT2, 0}});
    check_close(eta_from_proper({0, 0, 1}, kCtx), {{1, 0}, {1, 0}});
    check_close(eta_from_proper({0, 0, -1}, kCtx), {{-1, 0}, {1, 0}});
    check_close(eta_from_proper({3, 0, 4}, kCtx), {{RT2, 0}, {2 * RT2, 0}});
    check_close(eta_from_proper({3, 0, -4}, kCtx), {{-RT2, 0}, {2 * RT2, 0}});
    check_close(eta_from_proper({0, 0, 0}, kCtx), {{0, 0}, {0, 0}});

    // round-trip oracle for the half-space form
    ProperPairState p = pair_from_eta(eta_from_proper({3, 0, 4}, kCtx));
    check_close(p.b, {3, 0, 4});
    check_close(p.c.norm(), 5.0);
    check_close(p.c.dot(p.b), 0.0);
}

TEST_CASE("proper invariant suite") {
    for (const CheckResult& r : run_check_suite("proper", CheckOptions{})) {
        INFO(r.name, " max_err=", r.max_err);
        CHECK(r.pass);
    }
}
