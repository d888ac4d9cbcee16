#pragma once

#include "spinor3/core.hpp"

/// Extended unitary group: the SU(2) part acting through its two matrix
/// representations, plus the reflection flag whose spinor action depends on
/// the spinor type.
namespace spinor3 {

enum class Parity { Proper, Reflected };

enum class SpinorType { T1, T2 };

/// Unit quaternion (n0, n) with a parity flag for the extended group.
struct GroupElement {
    double n0 = 1.0;
    Vec3 n{};
    Parity parity = Parity::Proper;

    double constraint_residual() const { return std::abs(n0 * n0 + n.dot(n) - 1.0); }
};

using Rotation3 = Mat3;

GroupElement group_identity();

/// Throws ValidationError when the unit constraint is violated beyond `tol`.
void validate(const GroupElement& g, double tol = 1e-9);

/// B(n) = I n0 - i sigma^j n_j; unitary with det +1.
Mat2c su2_matrix(const GroupElement& g);

/// The vector representation paired with su2_matrix. The cross-product sign
/// is the one that makes the hermitian-square covariance identity hold:
/// R = I + 2 (n0 K + K^2) with K v = n x v.
Rotation3 so3_matrix(const GroupElement& g);

/// Quaternion product; parity flags multiply. The result is renormalized
/// when floating-point drift exceeds 1e-14.
GroupElement compose(const GroupElement& g, const GroupElement& h);

GroupElement inverse(const GroupElement& g);

Spinor act_on_spinor(const GroupElement& g, const Spinor& s);

Vec3 act_on_vector(const GroupElement& g, const Vec3& v);

/// Spinor reflection: +i s for type 1, -i s for type 2.
Spinor parity_on_spinor(SpinorType t, const Spinor& s);

}  // namespace spinor3
