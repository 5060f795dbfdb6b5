#include "qmkit/angular/spin.hpp"

#include <cmath>

namespace qmkit::angular {

SpinRepresentation build_spin_rep(int two_j) {
    if (two_j < 0) throw InvalidJError("build_spin_rep: 2j must be non-negative");
    const int dim = two_j + 1;
    const double j = 0.5 * two_j;

    SpinRepresentation rep;
    rep.two_j = two_j;
    rep.jz = ComplexMatrix::Zero(dim, dim);
    rep.jplus = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double m = 0.5 * (two_j - 2 * i);
        rep.jz(i, i) = m;
        if (i > 0) {
            // raising m -> m+1 lands one row up
            rep.jplus(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        }
    }
    rep.jminus = rep.jplus.adjoint();
    rep.jx = 0.5 * (rep.jplus + rep.jminus);
    rep.jy = -0.5 * I * (rep.jplus - rep.jminus);
    return rep;
}

ComplexMatrix rotation_matrix(const SpinRepresentation& rep, const Vec3& axis, double phi) {
    if (std::abs(axis.norm() - 1.0) > 1e-10)
        throw NonUnitAxisError("rotation_matrix: axis must be a unit vector");
    const ComplexMatrix jn =
        axis.x() * rep.jx + axis.y() * rep.jy + axis.z() * rep.jz;
    return evolve_unitary(jn, phi);
}

ComplexMatrix euler_rotation(const SpinRepresentation& rep, double alpha, double beta,
                             double gamma) {
    const Vec3 ez(0, 0, 1), ey(0, 1, 0);
    return rotation_matrix(rep, ez, alpha) * rotation_matrix(rep, ey, beta) *
           rotation_matrix(rep, ez, gamma);
}

AxisAngle su2_axis_angle(const ComplexMatrix& u, double tol) {
    if (u.rows() != 2 || u.cols() != 2)
        throw NotSU2Error("su2_axis_angle: expected a 2x2 matrix");
    if ((u * u.adjoint() - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() > tol)
        throw NotSU2Error("su2_axis_angle: matrix not unitary");
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    if (std::abs(det - 1.0) > tol)
        throw NotSU2Error("su2_axis_angle: determinant must be +1");

    // U = cos(phi/2) 1 - i sin(phi/2) n.sigma
    const double c = 0.5 * std::real(u(0, 0) + u(1, 1));
    const ComplexMatrix m = I * (u - 0.5 * (u(0, 0) + u(1, 1)) * ComplexMatrix::Identity(2, 2));
    Vec3 v(std::real(m(0, 1)), -std::imag(m(0, 1)), std::real(m(0, 0)));
    const double s = v.norm();

    AxisAngle out;
    if (s < tol) {
        // U = +1 (phi = 0) or U = -1 (phi = 2pi, wrapped to 0 in [0, 2pi));
        // the axis is indeterminate and +z is returned by convention.
        out.axis = Vec3(0, 0, 1);
        out.angle = 0.0;
        return out;
    }
    out.axis = v / s;
    out.angle = 2.0 * std::atan2(s, c);
    if (out.angle >= 2.0 * M_PI) out.angle -= 2.0 * M_PI;
    return out;
}

}  // namespace qmkit::angular
