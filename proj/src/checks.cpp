#include "spinor3/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "spinor3/algebra.hpp"
#include "spinor3/calculus.hpp"
#include "spinor3/charts.hpp"
#include "spinor3/fd.hpp"
#include "spinor3/model_map.hpp"
#include "spinor3/proper_model.hpp"
#include "spinor3/pseudo_model.hpp"
#include "spinor3/transport.hpp"

namespace spinor3 {

namespace {

using Rng = std::mt19937_64;

struct Sampler {
    Rng rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    /// Planar angle bounded away from the cut direction gamma = 0.
    double safe_angle(double margin = 0.05) { return uniform(margin, kTwoPi - margin); }

    GroupElement group_element() {
        std::normal_distribution<double> g(0.0, 1.0);
        double q[4] = {g(rng), g(rng), g(rng), g(rng)};
        double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
        if (norm < 1e-8) return group_identity();
        return {q[0] / norm, {q[1] / norm, q[2] / norm, q[3] / norm}, Parity::Proper};
    }
    Spinor spinor() {
        std::normal_distribution<double> g(0.0, 1.0);
        return {{g(rng), g(rng)}, {g(rng), g(rng)}};
    }
    /// Point bounded away from axis, cut and (optionally) the plane.
    Vec3 safe_point(bool avoid_plane = false) {
        const double rho = uniform(0.4, 3.0);
        const double ang = safe_angle();
        double z = uniform(-2.0, 2.0);
        if (avoid_plane && std::abs(z) < 0.2) z = z < 0 ? z - 0.2 : z + 0.2;
        return {rho * std::cos(ang), rho * std::sin(ang), z};
    }
    Direction2 direction() {
        const double t = uniform(0.0, kTwoPi);
        return {std::cos(t), std::sin(t)};
    }
};

double cdist(const Complex& a, const Complex& b) { return std::abs(a - b); }

double sdist(const Spinor& a, const Spinor& b) { return spinor_dist(a, b); }

double vdist(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

using CheckFn = std::function<double(Sampler&)>;

struct CheckDef {
    const char* suite;
    const char* name;
    double tol;
    CheckFn fn;
};

// ---------------------------------------------------------------------------
// algebra

double check_homomorphism(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        GroupElement g = s.group_element(), h = s.group_element();
        Mat3 lhs = so3_matrix(compose(g, h));
        Mat3 rhs = so3_matrix(g) * so3_matrix(h);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(lhs(r, c) - rhs(r, c)));
        // orthogonality and unit determinant of the vector representation
        Mat3 gram = so3_matrix(g).transpose() * so3_matrix(g);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                worst = std::max(worst, std::abs(gram(r, c) - (r == c ? 1.0 : 0.0)));
        const Mat3& o = lhs;
        const double det = o(0, 0) * (o(1, 1) * o(2, 2) - o(1, 2) * o(2, 1)) -
                           o(0, 1) * (o(1, 0) * o(2, 2) - o(1, 2) * o(2, 0)) +
                           o(0, 2) * (o(1, 0) * o(2, 1) - o(1, 1) * o(2, 0));
        worst = std::max(worst, std::abs(det - 1.0));
    }
    return worst;
}

double check_kernel(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        GroupElement g = s.group_element();
        GroupElement neg{-g.n0, -g.n, g.parity};
        Mat3 a = so3_matrix(g), b = so3_matrix(neg);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    }
    return worst;
}

double check_covariance(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        GroupElement g = s.group_element();
        Spinor sp = s.spinor();
        auto [a0, v0] = pseudo_from_xi(sp);
        auto [a1, v1] = pseudo_from_xi(act_on_spinor(g, sp));
        worst = std::max(worst, std::abs(a1 - a0));
        worst = std::max(worst, vdist(v1, so3_matrix(g) * v0));
    }
    return worst;
}

double check_su2_unitary(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        Mat2c b = su2_matrix(s.group_element());
        // b * b^dagger = I
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                Complex e = b(r, 0) * std::conj(b(c, 0)) + b(r, 1) * std::conj(b(c, 1));
                worst = std::max(worst, cdist(e, r == c ? Complex{1, 0} : Complex{0, 0}));
            }
        worst = std::max(worst, cdist(b.det(), Complex{1, 0}));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// pseudo

double check_pseudo_round_trip(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        Vec3 x = s.safe_point();
        auto [a, v] = pseudo_from_xi(xi_from_pseudo(PseudoVectorState{x}, ctx));
        worst = std::max(worst, rel(vdist(v, x), x.norm()));
        worst = std::max(worst, rel(std::abs(a - x.norm()), x.norm()));
    }
    return worst;
}

double check_pseudo_phase_invariance(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        Spinor sp = s.spinor();
        const double alpha = s.uniform(0.0, kTwoPi);
        auto [a0, v0] = pseudo_from_xi(sp);
        auto [a1, v1] = pseudo_from_xi(sp * std::polar(1.0, alpha));
        worst = std::max(worst, std::abs(a1 - a0) + vdist(v1, v0));
    }
    return worst;
}

double check_pseudo_scalar_identity(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        auto [a, v] = pseudo_from_xi(s.spinor());
        worst = std::max(worst, std::abs(a - v.norm()));
    }
    return worst;
}

double check_pseudo_sign_structure(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        Vec3 x = s.safe_point();
        BranchContext ctx;
        ctx.mode = GammaMode::RealLift;
        ctx.gamma_lift = s.uniform(-10.0, 10.0);
        Spinor base = xi_from_pseudo(PseudoVectorState{x}, ctx);
        ctx.gamma_lift += kTwoPi;
        Spinor plus2pi = xi_from_pseudo(PseudoVectorState{x}, ctx);
        ctx.gamma_lift += kTwoPi;
        Spinor plus4pi = xi_from_pseudo(PseudoVectorState{x}, ctx);
        worst = std::max(worst, sdist(plus2pi, -base));
        worst = std::max(worst, sdist(plus4pi, base));
    }
    return worst;
}

double check_pseudo_polar_closure(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        PolarSpinorParams p;
        p.N = s.uniform(0.0, 3.0);
        p.M = s.uniform(0.0, 3.0);
        p.n = s.uniform(-kPi, kPi);
        p.m = s.uniform(-kPi, kPi);
        auto [a, v] = pseudo_from_xi(xi_from_polar(p, (i % 2) == 0));
        const Complex lhs{v.x, v.y};
        const Complex rhs = p.N * p.M * std::polar(1.0, p.gamma());
        worst = std::max(worst, cdist(lhs, rhs));
        (void)a;
    }
    return worst;
}

// ---------------------------------------------------------------------------
// proper

double check_proper_round_trip(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        Vec3 b = s.safe_point();
        ProperPairState p = pair_from_eta(eta_from_proper(b, ctx));
        worst = std::max(worst, rel(vdist(p.b, b), b.norm()));
    }
    return worst;
}

double check_proper_length_orth(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Spinor sp = s.spinor();
        ProperPairState p = pair_from_eta(sp);
        const double half = 0.5 * sp.norm_sq();
        worst = std::max(worst, std::abs(p.c.norm() - half));
        worst = std::max(worst, std::abs(p.b.norm() - half));
        worst = std::max(worst, std::abs(p.c.dot(p.b)) / std::max(half * half, 1e-300));
    }
    return worst;
}

double check_proper_covariance(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        GroupElement g = s.group_element();
        Spinor sp = s.spinor();
        ProperPairState p0 = pair_from_eta(sp);
        ProperPairState p1 = pair_from_eta(act_on_spinor(g, sp));
        Mat3 o = so3_matrix(g);
        worst = std::max(worst, vdist(p1.c, o * p0.c));
        worst = std::max(worst, vdist(p1.b, o * p0.b));
    }
    return worst;
}

double check_proper_parity(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        Spinor sp = s.spinor();
        ProperPairState p0 = pair_from_eta(sp);
        ProperPairState p1 = pair_from_eta(sp * Complex{0.0, 1.0});
        worst = std::max(worst, vdist(p1.c, -p0.c));
        worst = std::max(worst, vdist(p1.b, -p0.b));
    }
    return worst;
}

double check_proper_phase_rotation(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        Spinor sp = s.spinor();
        const double alpha = s.uniform(0.0, kTwoPi);
        ProperPairState p0 = pair_from_eta(sp);
        ProperPairState p1 = pair_from_eta(sp * std::polar(1.0, alpha));
        const double ca = std::cos(2.0 * alpha), sa = std::sin(2.0 * alpha);
        worst = std::max(worst, vdist(p1.c, p0.c * ca - p0.b * sa));
        worst = std::max(worst, vdist(p1.b, p0.b * ca + p0.c * sa));
    }
    return worst;
}

double check_proper_plane_continuity(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    const double delta = 1e-11;
    for (int i = 0; i < 300; ++i) {
        const double rho = s.uniform(0.5, 2.0);
        const double ang = s.safe_angle();
        const Vec3 base{rho * std::cos(ang), rho * std::sin(ang), 0.0};
        Spinor above = eta_from_proper({base.x, base.y, delta}, ctx);
        Spinor below = eta_from_proper({base.x, base.y, -delta}, ctx);
        worst = std::max(worst, sdist(above, below));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// map

double check_map_mutual_inverse(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Spinor sp = s.spinor();
        worst = std::max(worst, sdist(eta_to_xi(xi_to_eta(sp)), sp));
        worst = std::max(worst, sdist(xi_to_eta(eta_to_xi(sp)), sp));
    }
    return worst;
}

double check_map_cross_model(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    const Vec3 pinned[] = {{1, 0, 0}, {0, 0, 1}, {0, 0, -1}, {3, 0, 4}, {3, 0, -4}};
    for (const Vec3& x : pinned)
        worst = std::max(worst, sdist(xi_to_eta(xi_from_pseudo(PseudoVectorState{x}, ctx)),
                                      eta_from_proper(x, ctx)));
    for (int i = 0; i < 2000; ++i) {
        Vec3 x = s.safe_point();
        worst = std::max(worst, sdist(xi_to_eta(xi_from_pseudo(PseudoVectorState{x}, ctx)),
                                      eta_from_proper(x, ctx)));
    }
    return worst;
}

double check_map_anti_linearity(Sampler& s) {
    // Witness that the map does not commute with a phase rotation.
    Spinor sp = s.spinor();
    const Complex phase = std::polar(1.0, 1.0);
    const double diff = sdist(xi_to_eta(sp * phase), xi_to_eta(sp) * phase);
    return diff > 1e-3 ? 0.0 : 1.0;
}

// ---------------------------------------------------------------------------
// calculus

double check_oracle_dir_deriv_xi(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Vec3 x = s.safe_point();
        Direction2 n = s.direction();
        DirectionalDerivative d = dir_deriv_xi(PseudoVectorState{x}, n);
        const double gamma_ref = gamma_of(PseudoVectorState{x}, ctx);
        const double h = fd::step(x.norm());
        auto f = [&](const Vec3& y) { return fd::xi_lifted(y, gamma_ref, ctx); };
        Spinor g1 = fd::central_diff(f, x, 0, h);
        Spinor g2 = fd::central_diff(f, x, 1, h);
        const Complex num1 = n.n1 * g1.c1 + n.n2 * g2.c1;
        const Complex num2 = n.n1 * g1.c2 + n.n2 * g2.c2;
        const double scale = std::abs(d.d1) + std::abs(d.d2) + 1e-12;
        worst = std::max(worst, (cdist(d.d1, num1) + cdist(d.d2, num2)) / scale);
    }
    return worst;
}

double check_oracle_dir_deriv_eta(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Vec3 x = s.safe_point(true);
        Direction2 n = s.direction();
        DirectionalDerivative d = dir_deriv_eta(x, n);
        const double gamma_ref = gamma_of(PseudoVectorState{x}, ctx);
        const double h = fd::step(x.norm());
        auto f = [&](const Vec3& y) { return fd::eta_lifted(y, gamma_ref, ctx); };
        Spinor g1 = fd::central_diff(f, x, 0, h);
        Spinor g2 = fd::central_diff(f, x, 1, h);
        const Complex num1 = n.n1 * g1.c1 + n.n2 * g2.c1;
        const Complex num2 = n.n1 * g1.c2 + n.n2 * g2.c2;
        const double scale = std::abs(d.d1) + std::abs(d.d2) + 1e-12;
        worst = std::max(worst, (cdist(d.d1, num1) + cdist(d.d2, num2)) / scale);
    }
    return worst;
}

double check_oracle_chart_dir_deriv(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        ChartPoint p;
        p.chart = ChartId::CylindricalParabolic;
        p.variant = DomainVariant::ExtendedG;
        const double ang = s.uniform(0.0, kTwoPi);
        const double k = s.uniform(0.6, 2.0);
        p.y1 = k * std::cos(ang);
        p.y2 = k * std::sin(ang);
        p.y3 = s.uniform(-2.0, 2.0);
        const Model model = (i % 2) ? Model::Xi : Model::Eta;
        if (model == Model::Eta && std::abs(p.y3) < 0.1) p.y3 += 0.3;
        Direction2 nu = s.direction();
        DirectionalDerivative d = chart_dir_deriv(p, model, nu, ctx);
        const double h = fd::step(k);
        auto f = [&](const Vec3& y) {
            ChartPoint q = p;
            q.y1 = y.x;
            q.y2 = y.y;
            return model == Model::Xi ? xi_in_chart(q, ctx) : eta_in_chart(q, ctx);
        };
        const Vec3 yv{p.y1, p.y2, 0.0};
        Spinor g1 = fd::central_diff(f, yv, 0, h);
        Spinor g2 = fd::central_diff(f, yv, 1, h);
        const Complex num1 = nu.n1 * g1.c1 + nu.n2 * g2.c1;
        const Complex num2 = nu.n1 * g1.c2 + nu.n2 * g2.c2;
        const double scale = std::abs(d.d1) + std::abs(d.d2) + 1e-12;
        worst = std::max(worst, (cdist(d.d1, num1) + cdist(d.d2, num2)) / scale);
    }
    return worst;
}

CRResidual fd_cr_residual(const std::function<Spinor(const Vec3&)>& f, const Vec3& x, double h) {
    const Spinor g1 = fd::central_diff(f, x, 0, h);
    const Spinor g2 = fd::central_diff(f, x, 1, h);
    CRResidual r;
    r.D1 = g1.c1.real() - g2.c1.imag();
    r.D2 = g2.c1.real() + g1.c1.imag();
    r.D3 = g1.c2.real() - g2.c2.imag();
    r.D4 = g2.c2.real() + g1.c2.imag();
    return r;
}

double check_oracle_cr_xi(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        Vec3 x = s.safe_point();
        CRResidual r = cr_residual_xi(PseudoVectorState{x});
        const double gamma_ref = gamma_of(PseudoVectorState{x}, ctx);
        CRResidual num = fd_cr_residual(
            [&](const Vec3& y) { return fd::xi_lifted(y, gamma_ref, ctx); }, x,
            fd::step(x.norm()));
        const double scale =
            std::abs(r.D1) + std::abs(r.D2) + std::abs(r.D3) + std::abs(r.D4) + 1.0;
        worst = std::max(worst, (std::abs(r.D1 - num.D1) + std::abs(r.D2 - num.D2) +
                                 std::abs(r.D3 - num.D3) + std::abs(r.D4 - num.D4)) /
                                    scale);
    }
    return worst;
}

double check_oracle_cr_eta(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        Vec3 x = s.safe_point(true);
        CRResidual r = cr_residual_eta(x, half_space_of(x.z));
        const double gamma_ref = gamma_of(PseudoVectorState{x}, ctx);
        CRResidual num = fd_cr_residual(
            [&](const Vec3& y) { return fd::eta_lifted(y, gamma_ref, ctx); }, x,
            fd::step(x.norm()));
        const double scale =
            std::abs(r.D1) + std::abs(r.D2) + std::abs(r.D3) + std::abs(r.D4) + 1.0;
        worst = std::max(worst, (std::abs(r.D1 - num.D1) + std::abs(r.D2 - num.D2) +
                                 std::abs(r.D3 - num.D3) + std::abs(r.D4 - num.D4)) /
                                    scale);
    }
    return worst;
}

double check_decomposition(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        Vec3 x = s.safe_point();
        Direction2 n = s.direction();
        // Split n against the planar projection of the point: parallel has
        // n x a = 0, perpendicular has n . a = 0.
        const double rho = x.rho();
        const Direction2 par{x.x / rho, x.y / rho};
        const Direction2 perp{-x.y / rho, x.x / rho};
        const double cpar = n.n1 * par.n1 + n.n2 * par.n2;
        const double cperp = n.n1 * perp.n1 + n.n2 * perp.n2;
        DirectionalDerivative full = dir_deriv_xi(PseudoVectorState{x}, n);
        DirectionalDerivative dpar = dir_deriv_xi(PseudoVectorState{x}, par);
        DirectionalDerivative dperp = dir_deriv_xi(PseudoVectorState{x}, perp);
        worst = std::max(worst, cdist(full.d1, cpar * dpar.d1 + cperp * dperp.d1));
        worst = std::max(worst, cdist(full.d2, cpar * dpar.d2 + cperp * dperp.d2));
    }
    return worst;
}

double check_cut_antisymmetry(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Vec3 anchor{s.uniform(0.5, 2.0), 0.0, s.uniform(-1.5, 1.5)};
        Direction2 n = s.direction();
        const double mu = s.uniform(0.1, kPi - 0.1);
        ApproachDirection up{std::cos(mu), std::sin(mu)};
        ApproachDirection down{std::cos(mu), -std::sin(mu)};
        for (Model model : {Model::Xi, Model::Eta}) {
            AsymptoticDerivative a = singular_dir_deriv(RegionTag::Cut, anchor, model, n, up);
            AsymptoticDerivative b = singular_dir_deriv(RegionTag::Cut, anchor, model, n, down);
            for (int c = 0; c < 2; ++c)
                worst = std::max(worst, cdist(a.k_zero[c], -b.k_zero[c]));
        }
    }
    return worst;
}

double numeric_vs_asymptotic(Model model, RegionTag region, const Vec3& anchor,
                             const Direction2& n, const ApproachDirection& m, double eps) {
    const Vec3 x = anchor + Vec3{eps * m.m1, eps * m.m2, 0.0};
    DirectionalDerivative num = model == Model::Xi
                                    ? dir_deriv_xi(PseudoVectorState{x}, n)
                                    : dir_deriv_eta(x, n);
    AsymptoticDerivative asym = singular_dir_deriv(region, anchor, model, n, m);
    double worst = 0.0;
    for (int c = 0; c < 2; ++c) {
        const Complex numeric = c == 0 ? num.d1 : num.d2;
        const Complex predicted =
            asym.k_minus[c] * std::pow(eps, asym.lead_power) + asym.k_zero[c];
        if (std::abs(numeric) < 1e-9) continue;
        worst = std::max(worst, std::abs(predicted - numeric) / std::abs(numeric));
    }
    return worst;
}

double check_asymptotics(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 60; ++i) {
        // Directions with both (n.m) and (n x m) bounded away from zero keep
        // every coefficient in play; m must avoid the cut direction.
        const double base = s.uniform(0.0, kTwoPi);
        Direction2 n{std::cos(base), std::sin(base)};
        const double off = s.uniform(0.3, 1.2) * (s.uniform(0.0, 1.0) < 0.5 ? 1.0 : -1.0);
        double mang = wrap_angle_2pi(base + off);
        if (mang < 0.1 || mang > kTwoPi - 0.1) mang = wrap_angle_2pi(base - off);
        ApproachDirection m{std::cos(mang), std::sin(mang)};
        const double h = s.uniform(0.5, 2.0);
        for (double eps : {1e-4, 1e-5}) {
            for (Model model : {Model::Xi, Model::Eta}) {
                worst = std::max(worst, numeric_vs_asymptotic(model, RegionTag::AxisPlus,
                                                              {0, 0, h}, n, m, eps));
                worst = std::max(worst, numeric_vs_asymptotic(model, RegionTag::AxisMinus,
                                                              {0, 0, -h}, n, m, eps));
                worst = std::max(worst, numeric_vs_asymptotic(model, RegionTag::Origin,
                                                              {0, 0, 0}, n, m, eps));
                worst = std::max(worst, numeric_vs_asymptotic(model, RegionTag::Cut,
                                                              {h, 0, 0.7}, n, m, eps));
            }
        }
    }
    return worst;
}

double check_axis_structure(Sampler& s) {
    // xi model: the component aligned with the occupied axis half diverges,
    // the opposite one stays finite.
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double mu = s.uniform(0.2, kTwoPi - 0.2);
        ApproachDirection m{std::cos(mu), std::sin(mu)};
        const double t = s.uniform(0.0, kTwoPi);
        Direction2 n{std::cos(t), std::sin(t)};
        const double q = n.n1 * m.m2 - n.n2 * m.m1;
        if (std::abs(q) < 0.1) continue;
        AsymptoticDerivative up =
            singular_dir_deriv(RegionTag::AxisPlus, {0, 0, 1.0}, Model::Xi, n, m);
        AsymptoticDerivative dn =
            singular_dir_deriv(RegionTag::AxisMinus, {0, 0, -1.0}, Model::Xi, n, m);
        if (std::abs(up.k_minus[0]) < 1e-6) worst = std::max(worst, 1.0);
        worst = std::max(worst, std::abs(up.k_minus[1]));
        if (std::abs(up.k_zero[1]) < 1e-9 && std::abs(q) > 0.1) worst = std::max(worst, 1.0);
        if (std::abs(dn.k_minus[1]) < 1e-6) worst = std::max(worst, 1.0);
        worst = std::max(worst, std::abs(dn.k_minus[0]));
    }
    return worst;
}

double check_plane_residual_zeros(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const double rho = s.uniform(0.4, 3.0);
        const double ang = s.safe_angle();
        const Vec3 x{rho * std::cos(ang), rho * std::sin(ang), 0.0};
        CRResidual re = cr_residual_eta(x, HalfSpaceSign::Plus);
        worst = std::max(worst, std::abs(re.D1) + std::abs(re.D2) + std::abs(re.D3) +
                                    std::abs(re.D4));
        CRResidual rx = cr_residual_xi(PseudoVectorState{x});
        worst = std::max(worst, std::abs(rx.D3) + std::abs(rx.D4));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// charts

ChartPoint random_extended_point(Sampler& s, ChartId chart) {
    ChartPoint p;
    p.chart = chart;
    p.variant = DomainVariant::ExtendedG;
    switch (chart) {
        case ChartId::CylindricalParabolic: {
            const double ang = s.uniform(0.0, kTwoPi);
            const double k = s.uniform(0.4, 2.0);
            p.y1 = k * std::cos(ang);
            p.y2 = k * std::sin(ang);
            p.y3 = s.uniform(-2.0, 2.0);
            break;
        }
        case ChartId::Parabolic:
            p.y1 = s.uniform(0.3, 2.0);
            p.y2 = s.uniform(0.3, 2.0);
            p.y3 = s.uniform(0.0, 2.0 * kTwoPi);
            break;
        case ChartId::Spherical:
            p.y1 = s.uniform(0.3, 2.0);
            p.y2 = s.uniform(0.1, kPi - 0.1);
            p.y3 = s.uniform(-kTwoPi, kTwoPi);
            break;
    }
    return p;
}

double check_double_cover(Sampler& s) {
    double worst = 0.0;
    for (ChartId chart :
         {ChartId::CylindricalParabolic, ChartId::Parabolic, ChartId::Spherical}) {
        for (int i = 0; i < 300; ++i) {
            ChartPoint p = random_extended_point(s, chart);
            ChartPoint q = antipode(p);
            worst = std::max(worst, vdist(to_cartesian(p), to_cartesian(q)));
            // involution
            ChartPoint back = antipode(q);
            worst = std::max(worst, std::abs(back.y1 - p.y1) + std::abs(back.y2 - p.y2) +
                                        std::abs(principal_angle(back.y3 - p.y3)));
        }
    }
    return worst;
}

double check_sheet_sign_flip(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (ChartId chart :
         {ChartId::CylindricalParabolic, ChartId::Parabolic, ChartId::Spherical}) {
        for (int i = 0; i < 300; ++i) {
            ChartPoint p = random_extended_point(s, chart);
            ChartPoint q = antipode(p);
            worst = std::max(worst, sdist(xi_in_chart(q, ctx), -xi_in_chart(p, ctx)));
            worst = std::max(worst, sdist(eta_in_chart(q, ctx), -eta_in_chart(p, ctx)));
        }
    }
    return worst;
}

double check_chart_cartesian_consistency(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (ChartId chart :
         {ChartId::CylindricalParabolic, ChartId::Parabolic, ChartId::Spherical}) {
        for (int i = 0; i < 300; ++i) {
            ChartPoint p = random_extended_point(s, chart);
            const Vec3 x = to_cartesian(p);
            if (x.rho() < 1e-6) continue;
            const Spinor chart_xi = xi_in_chart(p, ctx);
            const Spinor vec_xi = xi_from_pseudo(PseudoVectorState{x}, ctx);
            // Sign relating the chart branch to the principal vector branch:
            // sheet parity for the charts whose fundamental window starts at
            // the cut, the phi >= 0 window for the spherical chart.
            double sign;
            if (chart == ChartId::Spherical)
                sign = p.y3 >= 0.0 ? 1.0 : -1.0;
            else
                sign = sheet_of(p) == SheetIndex::One ? 1.0 : -1.0;
            worst = std::max(worst, sdist(chart_xi, vec_xi * Complex{sign, 0.0}));
            const Spinor chart_eta = eta_in_chart(p, ctx);
            const Spinor vec_eta = eta_from_proper(x, ctx);
            worst = std::max(worst, sdist(chart_eta, vec_eta * Complex{sign, 0.0}));
        }
    }
    return worst;
}

double check_metric_jacobian(Sampler& s) {
    double worst = 0.0;
    for (ChartId chart :
         {ChartId::CylindricalParabolic, ChartId::Parabolic, ChartId::Spherical}) {
        for (int i = 0; i < 100; ++i) {
            ChartPoint p = random_extended_point(s, chart);
            MetricTensor g = metric(p);
            auto f = [&](double y1, double y2, double y3) {
                ChartPoint q = p;
                q.y1 = y1;
                q.y2 = y2;
                q.y3 = y3;
                return to_cartesian(q);
            };
            Vec3 j[3];
            for (int c = 0; c < 3; ++c)
                j[c] = fd::central_diff_vec(f, p.y1, p.y2, p.y3, c, 1e-5);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    worst = std::max(worst, std::abs(g(r, c) - j[r].dot(j[c])));
        }
    }
    return worst;
}

double check_parabolic_params(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        ChartPoint p;
        p.chart = ChartId::Parabolic;
        p.variant = DomainVariant::VectorG;
        p.y1 = s.uniform(0.2, 2.0);
        p.y2 = s.uniform(0.2, 2.0);
        p.y3 = s.uniform(0.0, kTwoPi - 1e-9);
        PolarSpinorParams polar = polar_from_xi(xi_in_chart(p, ctx));
        worst = std::max(worst, std::abs(polar.N - p.y1));
        worst = std::max(worst, std::abs(polar.M - p.y2));
        worst = std::max(worst, std::abs(principal_angle(polar.gamma() - p.y3)));
    }
    return worst;
}

double check_domain_conversion(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        ChartPoint p = random_extended_point(s, ChartId::Spherical);
        for (DomainVariant target : {DomainVariant::SphericalGPrime,
                                     DomainVariant::SphericalGDoublePrime,
                                     DomainVariant::ExtendedG}) {
            ChartPoint q = convert_spherical_domain(p, target);
            worst = std::max(worst, sdist(xi_in_chart(p, ctx), xi_in_chart(q, ctx)));
            worst = std::max(worst, vdist(to_cartesian(p), to_cartesian(q)));
            ChartPoint back = convert_spherical_domain(q, DomainVariant::ExtendedG);
            worst = std::max(worst, sdist(xi_in_chart(p, ctx), xi_in_chart(back, ctx)));
        }
    }
    return worst;
}

double check_cylpar_seam_free(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    const double delta = 1e-9;
    for (int i = 0; i < 200; ++i) {
        ChartPoint p;
        p.chart = ChartId::CylindricalParabolic;
        p.variant = DomainVariant::ExtendedG;
        p.y1 = s.uniform(0.4, 2.0) * (s.uniform(0.0, 1.0) < 0.5 ? 1.0 : -1.0);
        p.y3 = s.uniform(-2.0, 2.0);
        ChartPoint above = p, below = p;
        above.y2 = delta;
        below.y2 = -delta;
        worst = std::max(worst, sdist(xi_in_chart(above, ctx), xi_in_chart(below, ctx)));
        worst = std::max(worst, sdist(eta_in_chart(above, ctx), eta_in_chart(below, ctx)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// transport

Path circle_path(const Vec3& center, double radius, double height, int segments, int turns) {
    Path path;
    path.closed = true;
    const int total = segments * std::abs(turns == 0 ? 1 : turns);
    for (int i = 0; i < total; ++i) {
        const double t = kTwoPi * turns * (double(i) / total);
        path.points.push_back(
            {center.x + radius * std::cos(t), center.y + radius * std::sin(t), height});
    }
    return path;
}

double check_loop_law(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        const int w = static_cast<int>(s.uniform(0.0, 5.0)) - 2;
        const double radius = s.uniform(0.5, 2.0);
        // Center close enough to the axis that the loop encloses it when
        // winding; otherwise a small offset loop away from the axis.
        Vec3 center{s.uniform(-0.2, 0.2) * radius, s.uniform(-0.2, 0.2) * radius, 0.0};
        Path path = circle_path(center, radius, s.uniform(-1.0, 1.0), 128, w == 0 ? 1 : w);
        if (w == 0) {
            const double off = radius * 2.5;
            for (Vec3& p : path.points) p.x += off;
        }
        for (Model model : {Model::Xi, Model::Eta}) {
            TransportResult r = transport_spinor(path, model, ctx);
            BranchContext lifted = ctx;
            lifted.mode = GammaMode::RealLift;
            std::vector<double> lift = continue_gamma(path, ctx.axis_tol);
            lifted.gamma_lift = lift.front();
            const Vec3& p0 = path.points.front();
            Spinor initial = model == Model::Xi
                                 ? xi_from_pseudo(PseudoVectorState{p0}, lifted)
                                 : eta_from_proper(p0, lifted);
            const double parity = (r.winding.value() % 2 == 0) ? 1.0 : -1.0;
            worst = std::max(worst, sdist(r.final, initial * Complex{parity, 0.0}));
            if (r.winding.value() != (w == 0 ? 0 : w)) worst = std::max(worst, 1.0);
        }
    }
    return worst;
}

double check_refinement_stability(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
        Path path = circle_path({0.1, -0.1, 0.0}, s.uniform(0.8, 1.5), s.uniform(-1.0, 1.0),
                                100, 1);
        Path refined;
        refined.closed = true;
        for (std::size_t k = 0; k < path.points.size(); ++k) {
            const Vec3& a = path.points[k];
            const Vec3& b = path.points[(k + 1) % path.points.size()];
            refined.points.push_back(a);
            refined.points.push_back((a + b) * 0.5);
        }
        for (Model model : {Model::Xi, Model::Eta}) {
            TransportResult r0 = transport_spinor(path, model, ctx);
            TransportResult r1 = transport_spinor(refined, model, ctx);
            worst = std::max(worst, sdist(r0.final, r1.final));
        }
    }
    return worst;
}

double check_concatenation(Sampler& s) {
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
        const int w1 = static_cast<int>(s.uniform(0.0, 5.0)) - 2;
        const int w2 = static_cast<int>(s.uniform(0.0, 5.0)) - 2;
        Path p1 = circle_path({0, 0, 0}, 1.0, 0.5, 64, w1 == 0 ? 1 : w1);
        Path p2 = circle_path({0, 0, 0}, 1.0, 0.5, 64, w2 == 0 ? 1 : w2);
        if (w1 == 0)
            for (Vec3& p : p1.points) p.x += 2.5;
        if (w2 == 0)
            for (Vec3& p : p2.points) p.x += 2.5;
        // Join through the common basepoint of the two loops.
        Path joined;
        joined.closed = true;
        joined.points = p1.points;
        joined.points.push_back(p1.points.front());
        const Vec3 from = p1.points.front();
        const Vec3 to = p2.points.front();
        for (int k = 1; k < 16; ++k)
            joined.points.push_back(from + (to - from) * (double(k) / 16.0));
        joined.points.insert(joined.points.end(), p2.points.begin(), p2.points.end());
        joined.points.push_back(to);
        for (int k = 15; k >= 1; --k)
            joined.points.push_back(from + (to - from) * (double(k) / 16.0));
        const int sum = winding(p1) + winding(p2);
        if (winding(joined) != sum) worst = std::max(worst, 1.0);
    }
    return worst;
}

double check_sheet_bookkeeping(Sampler& s) {
    BranchContext ctx;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int w = static_cast<int>(s.uniform(0.0, 5.0)) - 2;
        Path path = circle_path({0, 0, 0}, s.uniform(0.5, 2.0), 0.4, 96, w == 0 ? 1 : w);
        if (w == 0)
            for (Vec3& p : path.points) p.x += 3.0;
        TransportResult r = transport_spinor(path, Model::Xi, ctx);
        const double wrapped = std::fmod(std::fmod(r.gamma_end, 2.0 * kTwoPi) + 2.0 * kTwoPi,
                                         2.0 * kTwoPi);
        ChartPoint q;
        q.chart = ChartId::Parabolic;
        q.variant = DomainVariant::ExtendedG;
        q.y1 = 1.0;
        q.y2 = 1.0;
        q.y3 = wrapped;
        const int sheet_from_lift = wrapped < kTwoPi ? 1 : 2;
        if (static_cast<int>(sheet_of(q)) != sheet_from_lift) worst = std::max(worst, 1.0);
    }
    return worst;
}

// ---------------------------------------------------------------------------

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"algebra", "algebra/homomorphism", 1e-12, check_homomorphism},
        {"algebra", "algebra/kernel-exact", 0.0, check_kernel},
        {"algebra", "algebra/covariance", 1e-12, check_covariance},
        {"algebra", "algebra/su2-unitary", 1e-12, check_su2_unitary},
        {"pseudo", "pseudo/round-trip", 1e-10, check_pseudo_round_trip},
        {"pseudo", "pseudo/phase-invariance", 1e-12, check_pseudo_phase_invariance},
        {"pseudo", "pseudo/scalar-identity", 1e-12, check_pseudo_scalar_identity},
        {"pseudo", "pseudo/sign-structure", 1e-12, check_pseudo_sign_structure},
        {"pseudo", "pseudo/polar-closure", 1e-12, check_pseudo_polar_closure},
        {"proper", "proper/round-trip", 1e-10, check_proper_round_trip},
        {"proper", "proper/length-orthogonality", 1e-12, check_proper_length_orth},
        {"proper", "proper/covariance", 1e-12, check_proper_covariance},
        {"proper", "proper/parity-exact", 0.0, check_proper_parity},
        {"proper", "proper/phase-rotation", 1e-12, check_proper_phase_rotation},
        {"proper", "proper/plane-continuity", 1e-10, check_proper_plane_continuity},
        {"map", "map/mutual-inverse", 1e-14, check_map_mutual_inverse},
        {"map", "map/cross-model", 1e-12, check_map_cross_model},
        {"map", "map/anti-linearity", 0.0, check_map_anti_linearity},
        {"calculus", "calculus/oracle-dir-deriv-xi", 1e-6, check_oracle_dir_deriv_xi},
        {"calculus", "calculus/oracle-dir-deriv-eta", 1e-6, check_oracle_dir_deriv_eta},
        {"calculus", "calculus/oracle-chart-dir-deriv", 1e-6, check_oracle_chart_dir_deriv},
        {"calculus", "calculus/oracle-cr-xi", 1e-6, check_oracle_cr_xi},
        {"calculus", "calculus/oracle-cr-eta", 1e-6, check_oracle_cr_eta},
        {"calculus", "calculus/decomposition", 1e-12, check_decomposition},
        {"calculus", "calculus/cut-antisymmetry", 0.0, check_cut_antisymmetry},
        {"calculus", "calculus/asymptotics", 1e-3, check_asymptotics},
        {"calculus", "calculus/axis-structure", 1e-9, check_axis_structure},
        {"calculus", "calculus/plane-residual-zeros", 1e-10, check_plane_residual_zeros},
        {"charts", "charts/double-cover", 1e-12, check_double_cover},
        {"charts", "charts/sheet-sign-flip", 1e-12, check_sheet_sign_flip},
        {"charts", "charts/cartesian-consistency", 1e-12, check_chart_cartesian_consistency},
        {"charts", "charts/metric-jacobian", 1e-8, check_metric_jacobian},
        {"charts", "charts/parabolic-params", 1e-12, check_parabolic_params},
        {"charts", "charts/domain-conversion", 1e-12, check_domain_conversion},
        {"charts", "charts/seam-free", 1e-6, check_cylpar_seam_free},
        {"transport", "transport/loop-law", 1e-9, check_loop_law},
        {"transport", "transport/refinement-stability", 1e-9, check_refinement_stability},
        {"transport", "transport/concatenation", 0.0, check_concatenation},
        {"transport", "transport/sheet-bookkeeping", 0.0, check_sheet_bookkeeping},
    };
    return defs;
}

}  // namespace

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> names = {
        "algebra", "pseudo", "proper", "map", "calculus", "charts", "transport", "all"};
    return names;
}

std::vector<CheckResult> run_check_suite(const std::string& suite, const CheckOptions& opt) {
    const auto& names = check_suites();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw ValidationError("unknown check suite: " + suite);
    std::vector<CheckResult> results;
    std::uint64_t salt = 1;
    for (const CheckDef& def : registry()) {
        ++salt;
        if (suite != "all" && suite != def.suite) continue;
        Sampler sampler(opt.seed ^ (salt * 0x9E3779B97F4A7C15ull));
        CheckResult r;
        r.name = def.name;
        r.max_err = def.fn(sampler);
        r.tol = opt.tol_override.value_or(def.tol);
        r.pass = r.max_err <= r.tol;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace spinor3
