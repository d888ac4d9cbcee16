#pragma once

#include <array>

#include "spinor3/charts.hpp"
#include "spinor3/core.hpp"
#include "spinor3/proper_model.hpp"
#include "spinor3/pseudo_model.hpp"

/// Differential analysis of both spinor fields: planar 2-gradients,
/// directional derivatives, the diagonal connection matrix, modified
/// Cauchy-Riemann residuals, and Laurent-style asymptotics of directional
/// derivatives near the singular sets.
namespace spinor3 {

enum class Model { Xi, Eta };

/// Unit direction in the (x1, x2) plane.
struct Direction2 {
    double n1 = 1.0, n2 = 0.0;

    Direction2() = default;
    Direction2(double a, double b) : n1(a), n2(b) {
        const double len = std::hypot(a, b);
        if (len < 1e-300) throw ValidationError("direction must be nonzero");
        n1 /= len;
        n2 /= len;
    }
};

/// Unit planar direction along which a singular point is approached.
/// mu() is the principal angle with e^{i mu} = m1 + i m2.
struct ApproachDirection {
    double m1 = 1.0, m2 = 0.0;

    ApproachDirection() = default;
    ApproachDirection(double a, double b) : m1(a), m2(b) {
        const double len = std::hypot(a, b);
        if (len < 1e-300) throw ValidationError("approach direction must be nonzero");
        m1 /= len;
        m2 /= len;
    }
    double mu() const { return std::atan2(m2, m1); }
};

/// Derivative of both spinor components along one planar direction.
struct DirectionalDerivative {
    Complex d1{0, 0}, d2{0, 0};
};

/// Planar 2-gradient: d[component][coordinate].
struct GradTable {
    std::array<std::array<Complex, 2>, 2> d{};
};

/// Modified Cauchy-Riemann residuals of the two components:
///   D1 = dU1/dx1 - dV1/dx2, D2 = dU1/dx2 + dV1/dx1,
///   D3 = dU2/dx1 - dV2/dx2, D4 = dU2/dx2 + dV2/dx1.
/// All four vanish exactly where the component is C-R analytic.
struct CRResidual {
    double D1 = 0, D2 = 0, D3 = 0, D4 = 0;
};

/// Laurent-style coefficients of a directional derivative near a singular
/// set, per spinor component:
///   value(eps) ~ k_minus * eps^lead_power + k_zero + k_plus * eps^(-lead_power).
/// lead_power is -1 for axis and cut anchors, -1/2 for the in-plane origin
/// (the expansion there is exact), and +1/2 for the infinite boundary where
/// eps is the reciprocal of the anchor radius.
struct AsymptoticDerivative {
    std::array<Complex, 2> k_minus{};
    std::array<Complex, 2> k_zero{};
    std::array<Complex, 2> k_plus{};
    double lead_power = -1.0;
    /// Representation threshold: coefficients describe the derivative for
    /// eps below this value.
    double valid_eps = 1e-2;

    Complex evaluate(int component, double eps) const {
        return k_minus[component] * std::pow(eps, lead_power) + k_zero[component] +
               k_plus[component] * std::pow(eps, -lead_power);
    }
};

/// 2-gradient of xi; throws SingularPointError on the axis and at the origin
/// (use singular_dir_deriv there). On the branch cut the gamma = 0 boundary
/// value is returned.
GradTable grad_xi(const PseudoVectorState& v);

DirectionalDerivative dir_deriv_xi(const PseudoVectorState& v, const Direction2& n);

GradTable grad_eta(const Vec3& b);

DirectionalDerivative dir_deriv_eta(const Vec3& b, const Direction2& n);

/// Diagonal matrix A with dir_deriv_xi(v, n) = A xi_from_pseudo(v).
Mat2c connection_matrix(const PseudoVectorState& v, const Direction2& n);

CRResidual cr_residual_xi(const PseudoVectorState& v);

/// sigma selects the half-space continuation whose component-1 residuals are
/// measured; the natural choice is half_space_of(b.z).
CRResidual cr_residual_eta(const Vec3& b, HalfSpaceSign sigma);

/// Directional-derivative asymptotics at a singular anchor. `region` must be
/// AxisPlus, AxisMinus, Origin (the in-plane origin point) or Cut; the
/// anchor supplies the axis height or cut position. The approach direction
/// may not point along the cut (m = (1,0) from axis or origin anchors,
/// m = +-(1,0) from cut anchors). Phases follow the gamma in [0, 2pi)
/// branch of the vector model.
AsymptoticDerivative singular_dir_deriv(RegionTag region, const Vec3& anchor, Model model,
                                        const Direction2& n, const ApproachDirection& m);

/// Asymptotics at the infinite boundary of the plane x3 = anchor_x3: the
/// derivative at radius 1/eps in direction m, to leading order 1/sqrt(1/eps).
AsymptoticDerivative singular_dir_deriv_at_infinity(Model model, double anchor_x3,
                                                    const Direction2& n,
                                                    const ApproachDirection& m);

/// Directional derivative in the (y1, y2) plane of the cylindrical parabolic
/// chart; defined everywhere except the chart origin y1 = y2 = 0.
DirectionalDerivative chart_dir_deriv(const ChartPoint& p, Model model, const Direction2& nu,
                                      const BranchContext& ctx);

}  // namespace spinor3
