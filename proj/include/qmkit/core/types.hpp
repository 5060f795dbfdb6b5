// types.hpp -- shared matrix/vector aliases and numeric conventions.
//
// Conventions used across the library: hbar = 1, particle mass m = 1 unless
// a mass argument is explicit, velocities v_E = sqrt(2E/m).  Complex square
// roots are taken on the branch with non-negative imaginary part (retarded /
// evanescent-decay convention).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qmkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

inline constexpr Complex I{0.0, 1.0};

struct NonSquareError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// max |M - M^dagger| entrywise
inline double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("hermiticity_defect: matrix not square");
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12) {
    return hermiticity_defect(m) <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

// Branch with non-negative imaginary part: sqrt(E) is real positive for E>0
// and +i*sqrt(|E|) for E<0.
inline Complex retarded_sqrt(Complex z) {
    Complex r = std::sqrt(z);
    if (r.imag() < 0.0) r = -r;
    return r;
}

// velocity at energy E for mass m (natural units)
inline double velocity(double energy, double mass = 1.0) {
    return std::sqrt(2.0 * energy / mass);
}

}  // namespace qmkit
