#include <doctest.h>

#include <cmath>

#include "spinor3/checks.hpp"
#include "spinor3/model_map.hpp"
#include "spinor3/proper_model.hpp"
#include "spinor3/pseudo_model.hpp"
#include "test_util.hpp"

using namespace spinor3;
using testutil::check_close;

namespace {
const double RT2 = std::sqrt(2.0);
}

TEST_CASE("xi to eta") {
    check_close(xi_to_eta({{1, 0}, {1, 0}}), {{0, 0}, {RT2, 0}});
    check_close(xi_to_eta({{0, 0}, {0, 0}}), {{0, 0}, {0, 0}});
    check_close(xi_to_eta({{3, 0}, {1, 0}}), {{RT2, 0}, {2 * RT2, 0}});
    // cross-check against the half-space construction at b = (3,0,4)
    check_close(xi_to_eta({{3, 0}, {1, 0}}), eta_from_proper({3, 0, 4}, BranchContext{}));
}

TEST_CASE("eta to xi") {
    check_close(eta_to_xi({{0, 0}, {RT2, 0}}), {{1, 0}, {1, 0}});
    check_close(eta_to_xi({{0, 0}, {0, 0}}), {{0, 0}, {0, 0}});
    const Spinor s{std::polar(1.0, -kPi / 4), std::polar(1.0, kPi / 4)};
    check_close(eta_to_xi(xi_to_eta(s)), s, 1e-14);
}

TEST_CASE("anti-linearity witness") {
    const Spinor s{{0.4, 1.1}, {-0.3, 0.7}};
    const Complex phase = std::polar(1.0, 0.9);
    CHECK(spinor_dist(xi_to_eta(s * phase), xi_to_eta(s) * phase) > 1e-2);
}

TEST_CASE("map invariant suite") {
    for (const CheckResult& r : run_check_suite("map", CheckOptions{})) {
        INFO(r.name, " max_err=", r.max_err);
        CHECK(r.pass);
    }
}
