#include "spinor3/proper_model.hpp"

namespace spinor3 {

ProperPairState pair_from_eta(const Spinor& s) {
    // With x = eta1, y = eta2:
    //   N^2 e^{2in} = x^2, M^2 e^{2im} = y^2, MN e^{i(m+n)} = x y,
    // so the trigonometric forms collapse to complex component arithmetic.
    const Complex x2 = s.c1 * s.c1;
    const Complex y2 = s.c2 * s.c2;
    const Complex xy = s.c1 * s.c2;
    ProperPairState p;
    p.c = {0.5 * (x2 - y2).imag(), 0.5 * (x2 + y2).real(), -xy.imag()};
    p.b = {0.5 * (y2 - x2).real(), 0.5 * (y2 + x2).imag(), xy.real()};
    return p;
}

std::pair<FrameVectors, ProperPairState> frame_from_params(double N, double M, double gamma,
                                                           double kappa) {
    if (N < 0.0 || M < 0.0) throw ValidationError("polar moduli must be nonnegative");
    const double half_diff = 0.5 * (M * M - N * N);
    const double f_len = 0.5 * (M * M + N * N);
    FrameVectors fr;
    fr.f = {half_diff * std::cos(gamma), half_diff * std::sin(gamma), M * N};
    fr.e_f = {-f_len * std::sin(gamma), f_len * std::cos(gamma), 0.0};
    ProperPairState p;
    const double ck = std::cos(kappa), sk = std::sin(kappa);
    p.c = fr.e_f * ck - fr.f * sk;
    p.b = fr.e_f * sk + fr.f * ck;
    return {fr, p};
}

Spinor eta_from_proper(const Vec3& bvec, const BranchContext& ctx, int sheet) {
    const PseudoVectorState v{bvec};
    const double b = v.a();
    const double rho = v.rho();
    switch (classify_region(v, ctx)) {
        case RegionTag::Origin:
            return {Complex{0, 0}, Complex{0, 0}};
        case RegionTag::AxisPlus: {
            const Complex u = std::polar(1.0, 0.5 * ctx.gamma_axis);
            const double r = std::sqrt(bvec.z);
            return {r * std::conj(u), r * u};
        }
        case RegionTag::AxisMinus: {
            const Complex u = std::polar(1.0, 0.5 * ctx.gamma_axis);
            const double r = std::sqrt(-bvec.z);
            return {-r * std::conj(u), r * u};
        }
        default: {
            const double gamma = gamma_of(v, ctx, sheet);
            const Complex u = std::polar(1.0, 0.5 * gamma);
            const double sigma = bvec.z < 0.0 ? -1.0 : 1.0;
            const double gp = std::sqrt(b + rho);
            const double gm = std::abs(bvec.z) / gp;  // sqrt(b - rho) without cancellation
            return {sigma * gm * std::conj(u), gp * u};
        }
    }
}

}  // namespace spinor3
