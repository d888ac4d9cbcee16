#pragma once

#include "spinor3/core.hpp"
#include "spinor3/pseudo_model.hpp"

/// Proper-vector model: the spinor eta whose symmetric square yields a pair
/// of equal-length orthogonal proper vectors (c, b), the rotating frame
/// (f, e_f), and the half-space construction with sign sigma.
namespace spinor3 {

struct ProperPairState {
    Vec3 c{};
    Vec3 b{};

    double b_len() const { return b.norm(); }
    double rho_b() const { return b.rho(); }
};

struct FrameVectors {
    Vec3 f{};
    Vec3 e_f{};
};

enum class HalfSpaceSign : int { Plus = +1, Minus = -1 };

inline HalfSpaceSign half_space_of(double b3) {
    return b3 < 0.0 ? HalfSpaceSign::Minus : HalfSpaceSign::Plus;
}

/// The vector pair of a spinor, in closed complex arithmetic:
///   c1 + i b1 read off (eta (x) eta) = (c_j + i b_j) sigma^j.
/// |c| = |b| = (|eta1|^2 + |eta2|^2)/2 and c.b = 0 for every spinor.
ProperPairState pair_from_eta(const Spinor& s);

/// Frame vectors f, e_f of the (N, M, gamma) parameterization and the pair
/// they generate at angle kappa:
///   c = e_f cos(kappa) - f sin(kappa),  b = e_f sin(kappa) + f cos(kappa).
std::pair<FrameVectors, ProperPairState> frame_from_params(double N, double M, double gamma,
                                                           double kappa);

/// Canonical half-space spinor of a proper vector b:
///   eta = (sigma sqrt(b - rho) e^{-i gamma/2}, sqrt(b + rho) e^{+i gamma/2}),
/// sigma = sign(b3) (+1 on the plane). On the axis the mute angle
/// ctx.gamma_axis replaces gamma; the origin maps to the zero spinor.
Spinor eta_from_proper(const Vec3& bvec, const BranchContext& ctx, int sheet = 1);

}  // namespace spinor3
