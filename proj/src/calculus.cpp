#include "spinor3/calculus.hpp"

namespace spinor3 {

namespace {

const Complex kI{0.0, 1.0};

void require_off_axis(const PseudoVectorState& v) {
    switch (classify_region(v, BranchContext{})) {
        case RegionTag::AxisPlus:
        case RegionTag::AxisMinus:
        case RegionTag::Origin:
            throw SingularPointError(
                "gradient undefined on the axis; use singular_dir_deriv for the directional "
                "limit");
        default:
            break;
    }
}

/// Half-phase of the approach direction in the gamma in [0, 2pi) window of
/// the vector model, so that coefficients match numerical derivatives of the
/// principal-branch field.
Complex approach_half_phase(const ApproachDirection& m) {
    return std::polar(1.0, 0.5 * wrap_angle_2pi(std::atan2(m.m2, m.m1)));
}

void forbid_cut_approach(const ApproachDirection& m, bool both_signs) {
    const bool along_plus = std::abs(m.m2) <= 1e-12 && m.m1 > 0.0;
    const bool along_minus = std::abs(m.m2) <= 1e-12 && m.m1 < 0.0;
    if (along_plus || (both_signs && along_minus))
        throw ValidationError("approach direction may not run along the cut half-plane");
}

double sgn_or_one(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

GradTable grad_xi(const PseudoVectorState& v) {
    require_off_axis(v);
    const Spinor xi = xi_from_pseudo(v, BranchContext{});
    const double a = v.a();
    const double rho2 = v.a1 * v.a1 + v.a2 * v.a2;
    const double up = a * n_squared(v);
    const double dn = a * m_squared(v);
    GradTable t;
    t.d[0][0] = 0.5 * xi.c1 * (v.a1 / up + kI * v.a2 / rho2);
    t.d[0][1] = 0.5 * xi.c1 * (v.a2 / up - kI * v.a1 / rho2);
    t.d[1][0] = 0.5 * xi.c2 * (v.a1 / dn - kI * v.a2 / rho2);
    t.d[1][1] = 0.5 * xi.c2 * (v.a2 / dn + kI * v.a1 / rho2);
    return t;
}

DirectionalDerivative dir_deriv_xi(const PseudoVectorState& v, const Direction2& n) {
    require_off_axis(v);
    const Spinor xi = xi_from_pseudo(v, BranchContext{});
    const double a = v.a();
    const double rho2 = v.a1 * v.a1 + v.a2 * v.a2;
    const double p = n.n1 * v.a1 + n.n2 * v.a2;
    const double q = n.n1 * v.a2 - n.n2 * v.a1;
    DirectionalDerivative d;
    d.d1 = 0.5 * xi.c1 * (p / (a * n_squared(v)) + kI * q / rho2);
    d.d2 = 0.5 * xi.c2 * (p / (a * m_squared(v)) - kI * q / rho2);
    return d;
}

GradTable grad_eta(const Vec3& b) {
    const PseudoVectorState v{b};
    require_off_axis(v);
    const Spinor eta = eta_from_proper(b, BranchContext{});
    const double blen = v.a();
    const double rho = v.rho();
    GradTable t;
    t.d[0][0] = eta.c1 * (0.5 / rho) * (-b.x / blen + kI * b.y / rho);
    t.d[0][1] = eta.c1 * (0.5 / rho) * (-b.y / blen - kI * b.x / rho);
    t.d[1][0] = eta.c2 * (0.5 / rho) * (b.x / blen - kI * b.y / rho);
    t.d[1][1] = eta.c2 * (0.5 / rho) * (b.y / blen + kI * b.x / rho);
    return t;
}

DirectionalDerivative dir_deriv_eta(const Vec3& b, const Direction2& n) {
    const PseudoVectorState v{b};
    require_off_axis(v);
    const Spinor eta = eta_from_proper(b, BranchContext{});
    const double blen = v.a();
    const double rho = v.rho();
    const double p = n.n1 * b.x + n.n2 * b.y;
    const double q = n.n1 * b.y - n.n2 * b.x;
    DirectionalDerivative d;
    d.d1 = eta.c1 * (0.5 / rho) * (-p / blen + kI * q / rho);
    d.d2 = eta.c2 * (0.5 / rho) * (p / blen - kI * q / rho);
    return d;
}

Mat2c connection_matrix(const PseudoVectorState& v, const Direction2& n) {
    require_off_axis(v);
    const double a = v.a();
    const double rho2 = v.a1 * v.a1 + v.a2 * v.a2;
    const double p = n.n1 * v.a1 + n.n2 * v.a2;
    const double q = n.n1 * v.a2 - n.n2 * v.a1;
    Mat2c m;
    m(0, 0) = 0.5 * (p / (a * n_squared(v)) + kI * q / rho2);
    m(1, 1) = 0.5 * (p / (a * m_squared(v)) - kI * q / rho2);
    return m;
}

CRResidual cr_residual_xi(const PseudoVectorState& v) {
    require_off_axis(v);
    const double a = v.a();
    const double rho2 = v.a1 * v.a1 + v.a2 * v.a2;
    const double gamma = gamma_of(v, BranchContext{});
    const double c = std::cos(0.5 * gamma), s = std::sin(0.5 * gamma);
    const double fp = std::sqrt(n_squared(v)), fm = std::sqrt(m_squared(v));
    const double bracket_p = 1.0 / (a * fp) + fp / rho2;
    const double bracket_m = 1.0 / (a * fm) - fm / rho2;
    CRResidual r;
    r.D1 = 0.5 * (v.a1 * c + v.a2 * s) * bracket_p;
    r.D2 = 0.5 * (v.a2 * c - v.a1 * s) * bracket_p;
    r.D3 = 0.5 * (v.a1 * c - v.a2 * s) * bracket_m;
    r.D4 = 0.5 * (v.a2 * c + v.a1 * s) * bracket_m;
    return r;
}

CRResidual cr_residual_eta(const Vec3& b, HalfSpaceSign sigma) {
    const PseudoVectorState v{b};
    require_off_axis(v);
    const double blen = v.a();
    const double rho = v.rho();
    const double gamma = gamma_of(v, BranchContext{});
    const double c = std::cos(0.5 * gamma), s = std::sin(0.5 * gamma);
    const double gp = std::sqrt(blen + rho);
    const double gm = std::abs(b.z) / gp;  // sqrt(b - rho), stable
    const double factor = 1.0 / rho - 1.0 / blen;
    const double sg = static_cast<double>(static_cast<int>(sigma));
    CRResidual r;
    r.D1 = sg * (gm / (2.0 * rho)) * factor * (b.x * c + b.y * s);
    r.D2 = sg * (gm / (2.0 * rho)) * factor * (b.y * c - b.x * s);
    r.D3 = (gp / (2.0 * rho)) * factor * (-b.x * c + b.y * s);
    r.D4 = (gp / (2.0 * rho)) * factor * (-b.y * c - b.x * s);
    return r;
}

AsymptoticDerivative singular_dir_deriv(RegionTag region, const Vec3& anchor, Model model,
                                        const Direction2& n, const ApproachDirection& m) {
    const double p = n.n1 * m.m1 + n.n2 * m.m2;
    const double q = n.n1 * m.m2 - n.n2 * m.m1;
    const Complex Ep = approach_half_phase(m);   // e^{+i mu/2}
    const Complex Em = std::conj(Ep);            // e^{-i mu/2}
    AsymptoticDerivative out;

    switch (region) {
        case RegionTag::AxisPlus:
        case RegionTag::AxisMinus: {
            forbid_cut_approach(m, false);
            const double h = std::abs(anchor.z);
            if (h <= 0.0) throw ValidationError("axis anchor requires a nonzero height");
            if ((region == RegionTag::AxisPlus) != (anchor.z > 0.0))
                throw ValidationError("anchor height inconsistent with the axis region tag");
            out.lead_power = -1.0;
            out.valid_eps = 0.1 * h;
            if (model == Model::Xi) {
                const double rt = std::sqrt(2.0 * h);
                if (region == RegionTag::AxisPlus) {
                    out.k_minus[0] = 0.5 * kI * rt * q * Em;
                    out.k_plus[0] = rt * Em * (4.0 * p + kI * q) / (16.0 * h * h);
                    out.k_zero[1] = (Ep / rt) * (p - 0.5 * kI * q);
                } else {
                    out.k_zero[0] = (Em / rt) * (p + 0.5 * kI * q);
                    out.k_minus[1] = -0.5 * kI * rt * q * Ep;
                    out.k_plus[1] = rt * Ep * (4.0 * p - kI * q) / (16.0 * h * h);
                }
            } else {
                const double rt = std::sqrt(h);
                const double hs = 16.0 * h * h;
                if (region == RegionTag::AxisPlus) {
                    out.k_minus[0] = 0.5 * kI * rt * q * Em;
                    out.k_zero[0] = -(Em / (2.0 * rt)) * (p + 0.5 * kI * q);
                    out.k_plus[0] = rt * Em * (4.0 * p + kI * q) / hs;
                } else {
                    out.k_minus[0] = -0.5 * kI * rt * q * Em;
                    out.k_zero[0] = (Em / (2.0 * rt)) * (p + 0.5 * kI * q);
                    out.k_plus[0] = -rt * Em * (4.0 * p + kI * q) / hs;
                }
                out.k_minus[1] = -0.5 * kI * rt * q * Ep;
                out.k_zero[1] = (Ep / (2.0 * rt)) * (p - 0.5 * kI * q);
                out.k_plus[1] = rt * Ep * (4.0 * p - kI * q) / hs;
            }
            return out;
        }
        case RegionTag::Origin: {
            // In-plane origin: the expansion is a single exact eps^{-1/2} term.
            forbid_cut_approach(m, false);
            out.lead_power = -0.5;
            out.valid_eps = 1.0;
            if (model == Model::Xi) {
                out.k_minus[0] = 0.5 * Em * Complex{p, q};
                out.k_minus[1] = 0.5 * Ep * Complex{p, -q};
            } else {
                out.k_minus[1] = Ep * Complex{p, -q} / std::sqrt(2.0);
            }
            return out;
        }
        case RegionTag::Cut: {
            forbid_cut_approach(m, true);
            const double r1 = anchor.x;
            if (!(r1 > 0.0)) throw ValidationError("cut anchor requires x1 > 0, x2 = 0");
            const double x3 = anchor.z;
            const double s = sgn_or_one(m.m2);
            out.lead_power = -1.0;
            out.valid_eps = 0.1 * r1;
            if (model == Model::Xi) {
                const double a0 = std::hypot(r1, x3);
                const double fp = std::sqrt(a0 + x3), fm = std::sqrt(a0 - x3);
                out.k_zero[0] =
                    s * 0.5 * fp * Complex{n.n1 * r1 / (a0 * (a0 + x3)), -n.n2 / r1};
                out.k_zero[1] =
                    s * 0.5 * fm * Complex{n.n1 * r1 / (a0 * (a0 - x3)), n.n2 / r1};
            } else {
                const double b0 = std::hypot(r1, x3);
                const double gm = std::sqrt(b0 - r1), gp = std::sqrt(b0 + r1);
                const double sig = sgn_or_one(x3);
                out.k_zero[0] = sig * s * 0.5 * gm * Complex{-n.n1 / b0, -n.n2 / r1};
                out.k_zero[1] = s * 0.5 * gp * Complex{n.n1 / b0, n.n2 / r1};
            }
            return out;
        }
        default:
            throw ValidationError("singular_dir_deriv expects an Axis, Origin or Cut region");
    }
}

AsymptoticDerivative singular_dir_deriv_at_infinity(Model model, double /*anchor_x3*/,
                                                    const Direction2& n,
                                                    const ApproachDirection& m) {
    forbid_cut_approach(m, false);
    const double p = n.n1 * m.m1 + n.n2 * m.m2;
    const double q = n.n1 * m.m2 - n.n2 * m.m1;
    const Complex Ep = approach_half_phase(m);
    const Complex Em = std::conj(Ep);
    AsymptoticDerivative out;
    out.lead_power = 0.5;  // coefficient of 1/sqrt(Omega) at radius Omega = 1/eps
    out.valid_eps = 1e-3;
    if (model == Model::Xi) {
        out.k_minus[0] = 0.5 * Em * Complex{p, q};
        out.k_minus[1] = 0.5 * Ep * Complex{p, -q};
    } else {
        out.k_minus[1] = Ep * Complex{p, -q} / std::sqrt(2.0);
    }
    return out;
}

DirectionalDerivative chart_dir_deriv(const ChartPoint& p0, Model model, const Direction2& nu,
                                      const BranchContext& ctx) {
    const ChartPoint p = normalize_chart_point(p0);
    if (p.chart != ChartId::CylindricalParabolic)
        throw ValidationError("chart_dir_deriv is defined in the cylindrical parabolic chart");
    const double k2 = p.y1 * p.y1 + p.y2 * p.y2;
    if (k2 <= 1e-300)
        throw SingularPointError("chart derivative undefined at the origin of the y-plane");
    const double rho = 0.5 * k2;
    const double a = std::hypot(p.y3, rho);
    const double py = nu.n1 * p.y1 + nu.n2 * p.y2;
    const double qy = nu.n1 * p.y2 - nu.n2 * p.y1;
    DirectionalDerivative d;
    if (model == Model::Xi) {
        const Spinor xi = xi_in_chart(p, ctx);
        d.d1 = 0.5 * xi.c1 * (rho * py / (a * (a + p.y3)) + kI * qy / rho);
        d.d2 = 0.5 * xi.c2 * (rho * py / (a * (a - p.y3)) - kI * qy / rho);
    } else {
        const Spinor eta = eta_in_chart(p, ctx);
        d.d1 = 0.5 * eta.c1 * (-py / a + kI * qy / rho);
        d.d2 = 0.5 * eta.c2 * (py / a - kI * qy / rho);
    }
    return d;
}

}  // namespace spinor3
