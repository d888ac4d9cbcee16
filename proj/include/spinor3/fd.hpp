#pragma once

#include <functional>

#include "spinor3/core.hpp"
#include "spinor3/proper_model.hpp"
#include "spinor3/pseudo_model.hpp"

/// Finite-difference harness used by the numeric verification suites: field
/// evaluation on a locally continuous branch and central differences.
namespace spinor3::fd {

/// Step for central differences at a point of magnitude `scale`.
inline double step(double scale) { return 1e-6 * (1.0 + scale); }

/// Evaluates xi with the branch of gamma nearest to gamma_ref, so samples on
/// both sides of the cut stay on one continuous lift.
inline Spinor xi_lifted(const Vec3& x, double gamma_ref, const BranchContext& base) {
    BranchContext ctx = base;
    ctx.mode = GammaMode::RealLift;
    ctx.gamma_lift = gamma_ref + principal_angle(std::atan2(x.y, x.x) - gamma_ref);
    return xi_from_pseudo(PseudoVectorState{x}, ctx);
}

inline Spinor eta_lifted(const Vec3& x, double gamma_ref, const BranchContext& base) {
    BranchContext ctx = base;
    ctx.mode = GammaMode::RealLift;
    ctx.gamma_lift = gamma_ref + principal_angle(std::atan2(x.y, x.x) - gamma_ref);
    return eta_from_proper(x, ctx);
}

/// Central difference of a spinor-valued function of a 3-vector along axis j.
inline Spinor central_diff(const std::function<Spinor(const Vec3&)>& f, const Vec3& x, int j,
                           double h) {
    Vec3 xp = x, xm = x;
    (j == 0 ? xp.x : j == 1 ? xp.y : xp.z) += h;
    (j == 0 ? xm.x : j == 1 ? xm.y : xm.z) -= h;
    const Spinor fp = f(xp), fm = f(xm);
    const double inv = 0.5 / h;
    return {(fp.c1 - fm.c1) * inv, (fp.c2 - fm.c2) * inv};
}

/// Central-difference Jacobian column d(to_cartesian)/d(coordinate j).
inline Vec3 central_diff_vec(const std::function<Vec3(double, double, double)>& f, double y1,
                             double y2, double y3, int j, double h) {
    double p[3] = {y1, y2, y3};
    double m[3] = {y1, y2, y3};
    p[j] += h;
    m[j] -= h;
    const Vec3 a = f(p[0], p[1], p[2]);
    const Vec3 b = f(m[0], m[1], m[2]);
    return (a - b) * (0.5 / h);
}

}  // namespace spinor3::fd
