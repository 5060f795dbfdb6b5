// spin.hpp -- spin-j generator matrices and rotation operators.
//
// Half-integers are carried as twice-integers (two_j) so that j and m never
// touch floating-point equality.  Basis ordering is m = +j ... -j everywhere.

#pragma once

#include "qmkit/core/linalg.hpp"
#include "qmkit/core/types.hpp"

namespace qmkit::angular {

struct InvalidJError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonUnitAxisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSU2Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SpinRepresentation {
    int two_j = 0;  // 2j, non-negative
    ComplexMatrix jx, jy, jz, jplus, jminus;

    double j() const { return 0.5 * two_j; }
    int dim() const { return two_j + 1; }
    // m value of basis row i (i = 0 is m = +j), as twice-integer
    int two_m(int i) const { return two_j - 2 * i; }
};

// Ladder construction: [J+]_{m+1,m} = sqrt(j(j+1)-m(m+1)), Jz diagonal
// +j..-j, Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i).
SpinRepresentation build_spin_rep(int two_j);
inline SpinRepresentation build_spin_rep_j(double j) {
    const double two_j = 2.0 * j;
    const int t = static_cast<int>(std::lround(two_j));
    if (t < 0 || std::abs(two_j - t) > 1e-9)
        throw InvalidJError("build_spin_rep: 2j must be a non-negative integer");
    return build_spin_rep(t);
}

// exp(-i phi n.J); |n| must be 1 within 1e-10.
ComplexMatrix rotation_matrix(const SpinRepresentation& rep, const Vec3& axis, double phi);

// R = exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz)
ComplexMatrix euler_rotation(const SpinRepresentation& rep, double alpha, double beta,
                             double gamma);

struct AxisAngle {
    Vec3 axis;
    double angle;  // in [0, 2pi)
};

// Recover (n, phi) from a 2x2 special-unitary matrix, with the representative
// chosen so that sin(phi/2) >= 0- and phi in [0, 2pi).  At phi = 0 the axis is
// indeterminate and is returned as +z.
AxisAngle su2_axis_angle(const ComplexMatrix& u, double tol = 1e-10);

}  // namespace qmkit::angular
