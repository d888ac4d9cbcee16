#include "spinor3/algebra.hpp"

namespace spinor3 {

GroupElement group_identity() { return GroupElement{1.0, {0.0, 0.0, 0.0}, Parity::Proper}; }

void validate(const GroupElement& g, double tol) {
    if (!(g.constraint_residual() <= tol))
        throw ValidationError("group element violates unit quaternion constraint");
}

Mat2c su2_matrix(const GroupElement& g) {
    validate(g);
    const Complex i{0.0, 1.0};
    Mat2c b;
    b(0, 0) = g.n0 - i * g.n.z;
    b(0, 1) = -g.n.y - i * g.n.x;
    b(1, 0) = g.n.y - i * g.n.x;
    b(1, 1) = g.n0 + i * g.n.z;
    return b;
}

Rotation3 so3_matrix(const GroupElement& g) {
    validate(g);
    // K v = n x v
    Mat3 k;
    k.m = {{{0, -g.n.z, g.n.y}, {g.n.z, 0, -g.n.x}, {-g.n.y, g.n.x, 0}}};
    Mat3 k2 = k * k;
    Mat3 r = Mat3::identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] += 2.0 * (g.n0 * k.m[i][j] + k2.m[i][j]);
    return r;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    GroupElement r;
    r.n0 = g.n0 * h.n0 - g.n.dot(h.n);
    r.n = g.n0 * h.n + h.n0 * g.n + g.n.cross(h.n);
    r.parity = (g.parity == h.parity) ? Parity::Proper : Parity::Reflected;
    if (r.constraint_residual() > 1e-14) {
        double norm = std::sqrt(r.n0 * r.n0 + r.n.dot(r.n));
        r.n0 /= norm;
        r.n = r.n * (1.0 / norm);
    }
    return r;
}

GroupElement inverse(const GroupElement& g) { return {g.n0, -g.n, g.parity}; }

Spinor act_on_spinor(const GroupElement& g, const Spinor& s) {
    Mat2c b = su2_matrix(g);
    return {b(0, 0) * s.c1 + b(0, 1) * s.c2, b(1, 0) * s.c1 + b(1, 1) * s.c2};
}

Vec3 act_on_vector(const GroupElement& g, const Vec3& v) { return so3_matrix(g) * v; }

Spinor parity_on_spinor(SpinorType t, const Spinor& s) {
    const Complex j = (t == SpinorType::T1) ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
    return s * j;
}

}  // namespace spinor3
