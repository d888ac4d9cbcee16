#include "spinor3/transport.hpp"

namespace spinor3 {

namespace {

// The transported quantity is e^{i gamma/2}, where a jump of pi is already
// sign-ambiguous; pi/2 leaves a factor-2 safety margin.
constexpr double kMaxStep = 0.5 * kPi;

double lift_step(double lifted_prev, double raw_angle, std::size_t segment) {
    const double delta = principal_angle(raw_angle - lifted_prev);
    if (std::abs(delta) >= kMaxStep)
        throw ResolutionError("planar-angle increment at segment " + std::to_string(segment) +
                              " reaches pi/2; refine path");
    return lifted_prev + delta;
}

}  // namespace

std::vector<double> continue_gamma(const Path& path, double axis_tol) {
    if (path.points.empty()) throw ValidationError("path has no points");
    std::vector<double> lift;
    lift.reserve(path.points.size() + (path.closed ? 1 : 0));
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        const Vec3& p = path.points[i];
        if (p.rho() <= axis_tol * (1.0 + p.norm()))
            throw SingularPointError("path point " + std::to_string(i) +
                                     " lies inside the axis tube");
        const double raw = std::atan2(p.y, p.x);
        if (i == 0)
            lift.push_back(raw);
        else
            lift.push_back(lift_step(lift.back(), raw, i));
    }
    if (path.closed && path.points.size() > 1) {
        const double raw0 = std::atan2(path.points.front().y, path.points.front().x);
        lift.push_back(lift_step(lift.back(), raw0, path.points.size()));
    } else if (path.closed) {
        lift.push_back(lift.front());
    }
    return lift;
}

TransportResult transport_spinor(const Path& path, Model model, const BranchContext& ctx) {
    const std::vector<double> lift = continue_gamma(path, ctx.axis_tol);
    const Vec3& end_point = path.closed ? path.points.front() : path.points.back();
    BranchContext lifted = ctx;
    lifted.mode = GammaMode::RealLift;
    lifted.gamma_lift = lift.back();
    TransportResult r;
    r.gamma_end = lift.back();
    if (model == Model::Xi)
        r.final = xi_from_pseudo(PseudoVectorState{end_point}, lifted);
    else
        r.final = eta_from_proper(end_point, lifted);
    if (path.closed) {
        const int w = static_cast<int>(std::lround((lift.back() - lift.front()) / kTwoPi));
        r.winding = w;
        r.sign_flip = (w % 2) != 0;
    }
    return r;
}

int winding(const Path& path, double axis_tol) {
    if (!path.closed) throw ValidationError("winding is defined for closed paths");
    const std::vector<double> lift = continue_gamma(path, axis_tol);
    return static_cast<int>(std::lround((lift.back() - lift.front()) / kTwoPi));
}

}  // namespace spinor3
