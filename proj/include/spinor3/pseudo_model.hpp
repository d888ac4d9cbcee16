#pragma once

#include "spinor3/core.hpp"

/// Pseudo-vector model: the spinor field xi built from a real 3-vector by
/// taking a square root of its hermitian-square decomposition, the polar
/// parameterization, the region taxonomy and the branch conventions.
namespace spinor3 {

/// A point of the pseudo-vector space with its derived modulus and planar
/// radius.
struct PseudoVectorState {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;

    PseudoVectorState() = default;
    PseudoVectorState(double x, double y, double z) : a1(x), a2(y), a3(z) {}
    explicit PseudoVectorState(const Vec3& v) : a1(v.x), a2(v.y), a3(v.z) {}

    double a() const { return std::hypot(std::hypot(a1, a2), a3); }
    double rho() const { return std::hypot(a1, a2); }
    Vec3 vec() const { return {a1, a2, a3}; }
};

enum class RegionTag { InteriorPlus, InteriorMinus, Plane, AxisPlus, AxisMinus, Origin, Cut };

/// How the planar angle entering the half-angle phases is chosen.
///  - PrincipalVector:   gamma in [0, 2pi), cut along {a1 > 0, a2 = 0}.
///  - PrincipalExtended: gamma in [0, 4pi); the second 2pi window is selected
///    by the sheet argument of the field functions.
///  - RealLift:          gamma taken verbatim from BranchContext::gamma_lift
///    (the caller owns the continuity bookkeeping; used by transport).
enum class GammaMode { PrincipalVector, PrincipalExtended, RealLift };

struct BranchContext {
    /// Mute axis angle (the phase assigned on the x3 axis where the planar
    /// angle is undefined).
    double gamma_axis = 0.0;
    GammaMode mode = GammaMode::PrincipalVector;
    /// Relative tolerance of the axis tube: on-axis iff rho <= tol * (1 + a).
    double axis_tol = 1e-12;
    /// Lifted gamma, consumed only in RealLift mode.
    double gamma_lift = 0.0;
};

/// Polar spinor parameters (N e^{in}, M e^{im}). A zero modulus leaves the
/// corresponding angle undetermined; it is then set to 0 and flagged mute.
struct PolarSpinorParams {
    double N = 0.0, M = 0.0;
    double n = 0.0, m = 0.0;
    bool n_mute = false, m_mute = false;

    double kappa() const { return m + n; }
    double gamma() const { return m - n; }
};

/// Deterministic taxonomy at the context tolerance. Cut takes precedence over
/// Plane where both apply.
RegionTag classify_region(const PseudoVectorState& v, const BranchContext& ctx);

/// N^2 = a + a3 and M^2 = a - a3 of the polar construction, evaluated
/// through rho^2/(a -+ a3) on the cancelling side so points near the axis
/// keep full precision.
double n_squared(const PseudoVectorState& v);
double m_squared(const PseudoVectorState& v);

/// The gamma actually used by xi_from_pseudo for an off-axis point: the
/// principal angle in the window of ctx.mode (sheet 2 adds 2pi in extended
/// mode), or the verbatim lift in RealLift mode.
double gamma_of(const PseudoVectorState& v, const BranchContext& ctx, int sheet = 1);

/// The spinor field of the pseudo-vector model. Covers all of the space:
/// interior and plane points get the half-angle form, the axis gets the mute
/// angle ctx.gamma_axis, the origin maps to the zero spinor.
Spinor xi_from_pseudo(const PseudoVectorState& v, const BranchContext& ctx, int sheet = 1);

/// Inverse construction: the pseudo scalar a and pseudo vector of a spinor.
/// a equals |vector| and is insensitive to an overall phase of s.
std::pair<double, Vec3> pseudo_from_xi(const Spinor& s);

/// (N e^{-i gamma/2}, M e^{+i gamma/2}), optionally carrying the overall
/// phase e^{i kappa/2} (omitted by default).
Spinor xi_from_polar(const PolarSpinorParams& p, bool include_kappa_phase = false);

PolarSpinorParams polar_from_xi(const Spinor& s);

}  // namespace spinor3
