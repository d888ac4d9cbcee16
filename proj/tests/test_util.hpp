#pragma once

#include <doctest.h>

#include <complex>

#include "spinor3/core.hpp"

namespace spinor3::testutil {

inline void check_close(double a, double b, double tol = 1e-12) {
    CHECK(std::abs(a - b) <= tol);
}

inline void check_close(const Complex& a, const Complex& b, double tol = 1e-12) {
    CHECK(std::abs(a - b) <= tol);
}

inline void check_close(const Spinor& a, const Spinor& b, double tol = 1e-12) {
    CHECK(spinor_dist(a, b) <= tol);
}

inline void check_close(const Vec3& a, const Vec3& b, double tol = 1e-12) {
    CHECK((a - b).norm() <= tol);
}

}  // namespace spinor3::testutil
