#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

/// Core value types shared by every module: small fixed-size vectors and
/// matrices, the two-component spinor, and the error hierarchy.
namespace spinor3 {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument or constraint violation (maps to CLI exit code 1).
struct ValidationError : Error {
    using Error::Error;
};

/// Evaluation requested on a singular set where the quantity is not defined;
/// callers wanting the directional limit should use singular_dir_deriv.
struct SingularPointError : Error {
    using Error::Error;
};

/// A path is too coarse to continue the angle lift unambiguously.
struct ResolutionError : Error {
    using Error::Error;
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    /// Planar radius about the x3 axis.
    double rho() const { return std::hypot(x, y); }
};

/// 3x3 real matrix, row major.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static constexpr Mat3 identity() {
        Mat3 r;
        r.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        return r;
    }
    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }
};

/// 2x2 complex matrix, row major.
struct Mat2c {
    std::array<std::array<Complex, 2>, 2> m{};

    Complex& operator()(int i, int j) { return m[i][j]; }
    Complex operator()(int i, int j) const { return m[i][j]; }

    Mat2c operator*(const Mat2c& o) const {
        Mat2c r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }
    Complex det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

/// Two-component complex spinor; the carrier of both field models.
struct Spinor {
    Complex c1{0.0, 0.0};
    Complex c2{0.0, 0.0};

    Spinor() = default;
    Spinor(Complex a, Complex b) : c1(a), c2(b) {}

    double norm_sq() const { return std::norm(c1) + std::norm(c2); }
    Spinor operator*(Complex s) const { return {c1 * s, c2 * s}; }
    Spinor operator-() const { return {-c1, -c2}; }
    Spinor operator-(const Spinor& o) const { return {c1 - o.c1, c2 - o.c2}; }
    Spinor operator+(const Spinor& o) const { return {c1 + o.c1, c2 + o.c2}; }
};

inline double spinor_dist(const Spinor& a, const Spinor& b) {
    return std::sqrt(std::norm(a.c1 - b.c1) + std::norm(a.c2 - b.c2));
}

/// Representative of `angle` in (-pi, pi].
inline double principal_angle(double angle) {
    double a = std::remainder(angle, kTwoPi);
    if (a <= -kPi) a += kTwoPi;
    return a;
}

/// Representative of `angle` in [0, 2*pi).
inline double wrap_angle_2pi(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a;
}

/// Representative of `angle` in [lo, lo + 2*pi).
inline double wrap_angle_into(double angle, double lo) {
    return lo + wrap_angle_2pi(angle - lo);
}

}  // namespace spinor3
