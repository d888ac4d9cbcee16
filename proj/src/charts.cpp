#include "spinor3/charts.hpp"

namespace spinor3 {

namespace {

constexpr double kFourPi = 2.0 * kTwoPi;

double wrap_into_4pi_window(double angle, double lo) {
    double w = std::fmod(angle - lo, kFourPi);
    if (w < 0) w += kFourPi;
    return lo + w;
}

double clamp_small_negative(double v, const char* what) {
    if (v < 0.0) {
        if (v > -1e-12) return 0.0;
        throw ValidationError(std::string(what) + " must be nonnegative");
    }
    return v;
}

Complex half_phase(double gamma) { return std::polar(1.0, 0.5 * gamma); }

/// Canonical spherical representative: r >= 0, phi in [-2pi, 2pi). The
/// negative-r halves of GPrime/GDoublePrime are folded back through the
/// identifications xi(-r, theta, psi) = xi(r, theta, psi +- pi), choosing the
/// shift that keeps the half-phase unchanged (+pi for psi >= 0 in GPrime,
/// -pi / -3pi for GDoublePrime).
ChartPoint spherical_canonical(const ChartPoint& p) {
    ChartPoint c = p;
    c.variant = DomainVariant::ExtendedG;
    if (p.variant == DomainVariant::SphericalGPrime && p.y1 < 0.0) {
        c.y1 = -p.y1;
        c.y3 = p.y3 >= 0.0 ? p.y3 + kPi : p.y3 - kPi;
    } else if (p.variant == DomainVariant::SphericalGDoublePrime && p.y1 < 0.0) {
        c.y1 = -p.y1;
        c.y3 = p.y3 < kPi ? p.y3 - kPi : p.y3 - 3.0 * kPi;
    }
    return c;
}

bool spherical_on_axis(const ChartPoint& c, double axis_tol) {
    const double rho = c.y1 * std::abs(std::sin(c.y2));
    return rho <= axis_tol * (1.0 + c.y1);
}

}  // namespace

ChartPoint normalize_chart_point(const ChartPoint& p) {
    ChartPoint q = p;
    const bool extended = p.variant == DomainVariant::ExtendedG;
    if (p.chart != ChartId::Spherical && (p.variant == DomainVariant::SphericalGPrime ||
                                          p.variant == DomainVariant::SphericalGDoublePrime))
        throw ValidationError("GPrime domain variants exist only for the spherical chart");
    switch (p.chart) {
        case ChartId::CylindricalParabolic:
            if (!extended && p.y2 < 0.0) q.y2 = clamp_small_negative(p.y2, "y2 (vector domain)");
            break;
        case ChartId::Parabolic:
            q.y1 = clamp_small_negative(p.y1, "y1");
            q.y2 = clamp_small_negative(p.y2, "y2");
            q.y3 = extended ? wrap_into_4pi_window(p.y3, 0.0) : wrap_angle_2pi(p.y3);
            break;
        case ChartId::Spherical: {
            if (p.y2 < -1e-12 || p.y2 > kPi + 1e-12)
                throw ValidationError("theta must lie in [0, pi]");
            q.y2 = std::min(std::max(p.y2, 0.0), kPi);
            switch (p.variant) {
                case DomainVariant::VectorG:
                    q.y1 = clamp_small_negative(p.y1, "r (vector domain)");
                    q.y3 = wrap_angle_2pi(p.y3);
                    break;
                case DomainVariant::ExtendedG:
                    q.y1 = clamp_small_negative(p.y1, "r (extended domain)");
                    q.y3 = wrap_into_4pi_window(p.y3, -kTwoPi);
                    break;
                case DomainVariant::SphericalGPrime:
                    if (p.y3 < -kPi || p.y3 >= kPi)
                        throw ValidationError("GPrime requires phi in [-pi, pi)");
                    break;
                case DomainVariant::SphericalGDoublePrime:
                    if (p.y3 < 0.0 || p.y3 >= kTwoPi)
                        throw ValidationError("GDoublePrime requires phi in [0, 2pi)");
                    break;
            }
            break;
        }
    }
    return q;
}

Vec3 to_cartesian(const ChartPoint& p0) {
    const ChartPoint p = normalize_chart_point(p0);
    switch (p.chart) {
        case ChartId::CylindricalParabolic:
            return {0.5 * (p.y1 * p.y1 - p.y2 * p.y2), p.y1 * p.y2, p.y3};
        case ChartId::Parabolic:
            return {p.y1 * p.y2 * std::cos(p.y3), p.y1 * p.y2 * std::sin(p.y3),
                    0.5 * (p.y1 * p.y1 - p.y2 * p.y2)};
        case ChartId::Spherical: {
            const ChartPoint c = spherical_canonical(p);
            const double st = std::sin(c.y2);
            return {c.y1 * st * std::cos(c.y3), c.y1 * st * std::sin(c.y3),
                    c.y1 * std::cos(c.y2)};
        }
    }
    throw ValidationError("unknown chart");
}

MetricTensor metric(const ChartPoint& p0) {
    const ChartPoint p = normalize_chart_point(p0);
    Mat3 g{};
    switch (p.chart) {
        case ChartId::CylindricalParabolic: {
            const double k2 = p.y1 * p.y1 + p.y2 * p.y2;
            g(0, 0) = k2;
            g(1, 1) = k2;
            g(2, 2) = 1.0;
            break;
        }
        case ChartId::Parabolic: {
            const double k2 = p.y1 * p.y1 + p.y2 * p.y2;
            g(0, 0) = k2;
            g(1, 1) = k2;
            g(2, 2) = p.y1 * p.y1 * p.y2 * p.y2;
            break;
        }
        case ChartId::Spherical: {
            const double r2 = p.y1 * p.y1;
            const double st = std::sin(p.y2);
            g(0, 0) = 1.0;
            g(1, 1) = r2;
            g(2, 2) = r2 * st * st;
            break;
        }
    }
    return g;
}

Spinor xi_in_chart(const ChartPoint& p0, const BranchContext& ctx) {
    const ChartPoint p = normalize_chart_point(p0);
    switch (p.chart) {
        case ChartId::CylindricalParabolic: {
            const double k = std::hypot(p.y1, p.y2);
            const double rho = 0.5 * k * k;
            const double a = std::hypot(p.y3, rho);
            if (rho <= ctx.axis_tol * (1.0 + a)) {
                const Complex u = half_phase(ctx.gamma_axis);
                if (p.y3 > 0.0) return {std::sqrt(2.0 * p.y3) * std::conj(u), Complex{0, 0}};
                if (p.y3 < 0.0) return {Complex{0, 0}, std::sqrt(-2.0 * p.y3) * u};
                return {Complex{0, 0}, Complex{0, 0}};
            }
            const Complex u{p.y1 / k, p.y2 / k};  // e^{i gamma/2}, algebraic in y
            const double plus = p.y3 >= 0.0 ? a + p.y3 : rho * (rho / (a - p.y3));
            const double minus = p.y3 <= 0.0 ? a - p.y3 : rho * (rho / (a + p.y3));
            return {std::sqrt(plus) * std::conj(u), std::sqrt(minus) * u};
        }
        case ChartId::Parabolic: {
            const Complex u = half_phase(p.y3);
            return {p.y1 * std::conj(u), p.y2 * u};
        }
        case ChartId::Spherical: {
            const ChartPoint c = spherical_canonical(p);
            // 1 +- cos(theta) via half-angle squares keeps the poles exact.
            const double root2r = std::sqrt(2.0 * c.y1);
            const Complex u = half_phase(c.y3);
            return {root2r * std::cos(0.5 * c.y2) * std::conj(u),
                    root2r * std::sin(0.5 * c.y2) * u};
        }
    }
    throw ValidationError("unknown chart");
}

Spinor eta_in_chart(const ChartPoint& p0, const BranchContext& ctx) {
    const ChartPoint p = normalize_chart_point(p0);
    switch (p.chart) {
        case ChartId::CylindricalParabolic: {
            const double k = std::hypot(p.y1, p.y2);
            const double rho = 0.5 * k * k;
            const double b = std::hypot(p.y3, rho);
            if (rho <= ctx.axis_tol * (1.0 + b)) {
                const Complex u = half_phase(ctx.gamma_axis);
                if (p.y3 > 0.0) {
                    const double r = std::sqrt(p.y3);
                    return {r * std::conj(u), r * u};
                }
                if (p.y3 < 0.0) {
                    const double r = std::sqrt(-p.y3);
                    return {-r * std::conj(u), r * u};
                }
                return {Complex{0, 0}, Complex{0, 0}};
            }
            const Complex u{p.y1 / k, p.y2 / k};
            const double sigma = p.y3 < 0.0 ? -1.0 : 1.0;
            const double gp = std::sqrt(b + rho);
            return {sigma * (std::abs(p.y3) / gp) * std::conj(u), gp * u};
        }
        case ChartId::Parabolic: {
            const Complex u = half_phase(p.y3);
            const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
            return {(p.y1 - p.y2) * inv_sqrt2 * std::conj(u), (p.y1 + p.y2) * inv_sqrt2 * u};
        }
        case ChartId::Spherical: {
            const ChartPoint c = spherical_canonical(p);
            const double st = std::sin(c.y2);
            const double ct = std::cos(c.y2);
            const double sigma = ct < 0.0 ? -1.0 : 1.0;
            const Complex u = half_phase(c.y3);
            // r(1 - sin) = r cos^2/(1 + sin) avoids cancellation at the plane
            const double gp = std::sqrt(c.y1 * (1.0 + st));
            const double gm = gp > 0.0 ? std::sqrt(c.y1) * std::abs(ct) / std::sqrt(1.0 + st)
                                       : 0.0;
            return {sigma * gm * std::conj(u), gp * u};
        }
    }
    throw ValidationError("unknown chart");
}

ChartPoint antipode(const ChartPoint& p0) {
    const ChartPoint p = normalize_chart_point(p0);
    if (p.variant != DomainVariant::ExtendedG)
        throw ValidationError("antipode is defined on the ExtendedG variant");
    ChartPoint q = p;
    switch (p.chart) {
        case ChartId::CylindricalParabolic:
            q.y1 = -p.y1;
            q.y2 = -p.y2;
            break;
        case ChartId::Parabolic:
            q.y3 = wrap_into_4pi_window(p.y3 + kTwoPi, 0.0);
            break;
        case ChartId::Spherical:
            q.y3 = p.y3 >= 0.0 ? p.y3 - kTwoPi : p.y3 + kTwoPi;
            break;
    }
    return q;
}

SheetIndex sheet_of(const ChartPoint& p0) {
    const ChartPoint p = normalize_chart_point(p0);
    if (p.variant == DomainVariant::VectorG) return SheetIndex::One;
    switch (p.chart) {
        case ChartId::CylindricalParabolic:
            return (p.y2 > 0.0 || (p.y2 == 0.0 && p.y1 >= 0.0)) ? SheetIndex::One
                                                                : SheetIndex::Two;
        case ChartId::Parabolic:
            return p.y3 < kTwoPi ? SheetIndex::One : SheetIndex::Two;
        case ChartId::Spherical:
            if (p.variant != DomainVariant::ExtendedG)
                return p.y1 >= 0.0 ? SheetIndex::One : SheetIndex::Two;
            return (p.y3 >= -kPi && p.y3 < kPi) ? SheetIndex::One : SheetIndex::Two;
    }
    return SheetIndex::One;
}

ChartPoint convert_spherical_domain(const ChartPoint& p0, DomainVariant target) {
    const ChartPoint p = normalize_chart_point(p0);
    if (p.chart != ChartId::Spherical)
        throw ValidationError("domain conversion is defined for the spherical chart");
    const ChartPoint c = spherical_canonical(p);  // r >= 0, phi in [-2pi, 2pi)
    ChartPoint q = c;
    q.variant = target;
    const double phi = c.y3;
    switch (target) {
        case DomainVariant::ExtendedG:
            break;
        case DomainVariant::VectorG:
            if (phi < 0.0)
                throw ValidationError("the vector domain carries no second sheet");
            break;
        case DomainVariant::SphericalGPrime:
            if (phi >= kPi) {
                q.y1 = -c.y1;
                q.y3 = phi - kPi;
            } else if (phi < -kPi) {
                q.y1 = -c.y1;
                q.y3 = phi + kPi;
            }
            break;
        case DomainVariant::SphericalGDoublePrime:
            if (phi >= -kPi && phi < 0.0) {
                q.y1 = -c.y1;
                q.y3 = phi + kPi;
            } else if (phi < -kPi) {
                q.y1 = -c.y1;
                q.y3 = phi + 3.0 * kPi;
            }
            break;
    }
    return q;
}

DirectionNeighborhood direction_multiplicity(const ChartPoint& p0) {
    const ChartPoint p = normalize_chart_point(p0);
    DirectionNeighborhood r;
    if (p.chart == ChartId::CylindricalParabolic) {
        const double k = std::hypot(p.y1, p.y2);
        if (0.5 * k * k <= 1e-12 * (1.0 + std::abs(p.y3))) {
            r.multiplicity = DirectionMultiplicity::FourPi;
        } else {
            r.multiplicity = DirectionMultiplicity::TwoPi;
            r.delta_shift = std::atan2(p.y2, p.y1);
        }
        return r;
    }
    const Vec3 x = to_cartesian(p);
    const bool on_axis = (p.chart == ChartId::Spherical)
                             ? spherical_on_axis(spherical_canonical(p), 1e-12)
                             : x.rho() <= 1e-12 * (1.0 + x.norm());
    r.multiplicity =
        on_axis ? DirectionMultiplicity::FourPi : DirectionMultiplicity::TwoPi;
    return r;
}

}  // namespace spinor3
