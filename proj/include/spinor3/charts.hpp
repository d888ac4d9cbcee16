#pragma once

#include "spinor3/core.hpp"
#include "spinor3/pseudo_model.hpp"

/// Curvilinear chart atlas: cylindrical parabolic, parabolic and spherical
/// coordinates, their extended double-cover domains with identification
/// rules, sheet bookkeeping, metrics, and the spinor fields in chart
/// coordinates.
namespace spinor3 {

enum class ChartId { CylindricalParabolic, Parabolic, Spherical };

/// Parameter-domain variant. VectorG covers the vector space once; the
/// extended variants cover it twice:
///  - ExtendedG:  cylindrical parabolic doubles y2, parabolic doubles y3 to
///    [0, 4pi), spherical doubles phi to [-2pi, 2pi).
///  - SphericalGPrime:        r in R, phi in [-pi, pi)     (spherical only).
///  - SphericalGDoublePrime:  r in R, phi in [0, 2pi)      (spherical only).
enum class DomainVariant { VectorG, ExtendedG, SphericalGPrime, SphericalGDoublePrime };

/// Curvilinear coordinates tagged with chart and domain variant. For the
/// spherical chart (y1, y2, y3) = (r, theta, phi).
struct ChartPoint {
    ChartId chart = ChartId::CylindricalParabolic;
    double y1 = 0.0, y2 = 0.0, y3 = 0.0;
    DomainVariant variant = DomainVariant::VectorG;
};

/// Symmetric positive semidefinite 3x3 metric; degenerate only on coordinate
/// degeneracy loci.
using MetricTensor = Mat3;

enum class SheetIndex : int { One = 1, Two = 2 };

enum class DirectionMultiplicity { TwoPi, FourPi };

struct DirectionNeighborhood {
    DirectionMultiplicity multiplicity = DirectionMultiplicity::TwoPi;
    /// Rotation offset Delta(y) between the chart angle and the Cartesian
    /// planar angle; meaningful for cylindrical parabolic 2pi points.
    double delta_shift = 0.0;
};

/// Canonicalizes angular coordinates into the variant window and rejects
/// radial-range violations (e.g. r < 0 in a variant without a negative-r
/// half, or GPrime variants on a non-spherical chart).
ChartPoint normalize_chart_point(const ChartPoint& p);

Vec3 to_cartesian(const ChartPoint& p);

MetricTensor metric(const ChartPoint& p);

Spinor xi_in_chart(const ChartPoint& p, const BranchContext& ctx);

Spinor eta_in_chart(const ChartPoint& p, const BranchContext& ctx);

/// The other preimage of the same Cartesian point. Defined on the extended
/// variants; VectorG has no second sheet and throws ValidationError.
ChartPoint antipode(const ChartPoint& p);

/// Fundamental-sheet convention:
///   cylindrical parabolic: sheet 1 iff y2 > 0 or (y2 = 0 and y1 >= 0);
///   parabolic:             sheet 1 iff y3 in [0, 2pi);
///   spherical ExtendedG:   sheet 1 iff phi in [-pi, pi);
///   spherical GPrime/GDoublePrime: sheet 1 iff r >= 0;
///   VectorG: always sheet 1.
SheetIndex sheet_of(const ChartPoint& p);

/// Representative of the same spinor-space point in another spherical domain
/// variant; the spinor value is preserved exactly. Converting to VectorG is
/// only possible from the fundamental window and throws otherwise.
ChartPoint convert_spherical_domain(const ChartPoint& p, DomainVariant target);

/// 2pi/4pi classification of the direction neighborhood of a point: points
/// over the x3 axis see a 4pi tour of directions, all others 2pi with the
/// cylindrical parabolic offset Delta(y) = atan2(y2, y1).
DirectionNeighborhood direction_multiplicity(const ChartPoint& p);

}  // namespace spinor3
