#include "spinor3/pseudo_model.hpp"

namespace spinor3 {

namespace {

Complex half_phase(double gamma) { return std::polar(1.0, 0.5 * gamma); }

}  // namespace

double n_squared(const PseudoVectorState& v) {
    if (v.a3 >= 0.0) return v.a() + v.a3;
    const double rho = v.rho();
    return rho * (rho / (v.a() - v.a3));
}

double m_squared(const PseudoVectorState& v) {
    if (v.a3 <= 0.0) return v.a() - v.a3;
    const double rho = v.rho();
    return rho * (rho / (v.a() + v.a3));
}

RegionTag classify_region(const PseudoVectorState& v, const BranchContext& ctx) {
    const double scale = 1.0 + v.a();
    const double tol = ctx.axis_tol * scale;
    if (v.rho() <= tol) {
        if (v.a3 > tol) return RegionTag::AxisPlus;
        if (v.a3 < -tol) return RegionTag::AxisMinus;
        return RegionTag::Origin;
    }
    if (std::abs(v.a2) <= tol && v.a1 > 0.0) return RegionTag::Cut;
    if (std::abs(v.a3) <= tol) return RegionTag::Plane;
    return v.a3 > 0.0 ? RegionTag::InteriorPlus : RegionTag::InteriorMinus;
}

double gamma_of(const PseudoVectorState& v, const BranchContext& ctx, int sheet) {
    if (ctx.mode == GammaMode::RealLift) return ctx.gamma_lift;
    double g = wrap_angle_2pi(std::atan2(v.a2, v.a1));
    if (ctx.mode == GammaMode::PrincipalExtended && sheet == 2) g += kTwoPi;
    return g;
}

Spinor xi_from_pseudo(const PseudoVectorState& v, const BranchContext& ctx, int sheet) {
    switch (classify_region(v, ctx)) {
        case RegionTag::Origin:
            return {Complex{0, 0}, Complex{0, 0}};
        case RegionTag::AxisPlus:
            return {std::sqrt(2.0 * v.a3) * std::conj(half_phase(ctx.gamma_axis)), Complex{0, 0}};
        case RegionTag::AxisMinus:
            return {Complex{0, 0}, std::sqrt(-2.0 * v.a3) * half_phase(ctx.gamma_axis)};
        default: {
            const double gamma = gamma_of(v, ctx, sheet);
            const Complex u = half_phase(gamma);
            return {std::sqrt(n_squared(v)) * std::conj(u), std::sqrt(m_squared(v)) * u};
        }
    }
}

std::pair<double, Vec3> pseudo_from_xi(const Spinor& s) {
    const Complex w = std::conj(s.c1) * s.c2;
    const double n1 = std::norm(s.c1), n2 = std::norm(s.c2);
    return {0.5 * (n1 + n2), Vec3{w.real(), w.imag(), 0.5 * (n1 - n2)}};
}

Spinor xi_from_polar(const PolarSpinorParams& p, bool include_kappa_phase) {
    const Complex u = half_phase(p.gamma());
    Spinor s{p.N * std::conj(u), p.M * u};
    if (include_kappa_phase) s = s * std::polar(1.0, 0.5 * p.kappa());
    return s;
}

PolarSpinorParams polar_from_xi(const Spinor& s) {
    PolarSpinorParams p;
    p.N = std::abs(s.c1);
    p.M = std::abs(s.c2);
    if (p.N > 0.0) {
        p.n = std::arg(s.c1);
    } else {
        p.n = 0.0;
        p.n_mute = true;
    }
    if (p.M > 0.0) {
        p.m = std::arg(s.c2);
    } else {
        p.m = 0.0;
        p.m_mute = true;
    }
    return p;
}

}  // namespace spinor3
