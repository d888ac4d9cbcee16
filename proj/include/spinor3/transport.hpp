#pragma once

#include <optional>
#include <vector>

#include "spinor3/calculus.hpp"
#include "spinor3/core.hpp"
#include "spinor3/pseudo_model.hpp"

/// Covering-space continuation of a spinor along a polygonal path: the
/// planar angle is lifted to a real number, the winding about the x3 axis
/// counted, and the field evaluated on the lifted branch.
namespace spinor3 {

struct Path {
    std::vector<Vec3> points;
    bool closed = false;
};

struct TransportResult {
    Spinor final;
    /// Lifted planar angle at the end of the path (after the implicit
    /// closing segment when the path is closed).
    double gamma_end = 0.0;
    /// Turn count about the x3 axis; present only for closed paths.
    std::optional<int> winding;
    bool sign_flip = false;
};

/// Continuous lift of the planar angle along the path: entry 0 is the
/// principal angle of the first point, each further entry differs from its
/// predecessor by the increment representative nearest zero. Closed paths
/// get one extra entry for the virtual segment back to the start.
/// Throws ResolutionError when an increment reaches pi/2 (refine the path)
/// and SingularPointError when a point enters the axis tube.
std::vector<double> continue_gamma(const Path& path, double axis_tol = 1e-12);

/// Evaluates the selected field on the lifted branch at the path end.
/// For closed paths, final = (-1)^winding * initial.
TransportResult transport_spinor(const Path& path, Model model, const BranchContext& ctx);

/// Signed turn count of the planar projection about the axis; closed paths
/// only.
int winding(const Path& path, double axis_tol = 1e-12);

}  // namespace spinor3
