#include "qmkit/core/linalg.hpp"

namespace qmkit {

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double herm_tol) {
    if (m.rows() != m.cols()) throw NonSquareError("hermitian_eig: matrix not square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (hermiticity_defect(m) > herm_tol * scale)
        throw NonHermitianError("hermitian_eig: matrix not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix evolve_unitary(const ComplexMatrix& hamiltonian, double t) {
    const EigenDecomposition ed = hermitian_eig(hamiltonian);
    const Eigen::Index n = ed.values.size();
    ComplexVector phases(n);
    for (Eigen::Index k = 0; k < n; ++k)
        phases(k) = std::exp(-I * t * ed.values(k));
    return ed.vectors * phases.asDiagonal() * ed.vectors.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b, KeepSide keep) {
    const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
    if (rho.rows() != n || rho.cols() != n)
        throw DimensionMismatchError("partial_trace: rho dimension does not match dim_a*dim_b");

    if (keep == KeepSide::A) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                for (int b = 0; b < dim_b; ++b)
                    out(i, j) += rho(i * dim_b + b, j * dim_b + b);
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int a = 0; a < dim_a; ++a)
        for (int i = 0; i < dim_b; ++i)
            for (int j = 0; j < dim_b; ++j)
                out(i, j) += rho(a * dim_b + i, a * dim_b + j);
    return out;
}

}  // namespace qmkit
