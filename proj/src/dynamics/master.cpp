#include "qmkit/dynamics/master.hpp"

#include "qmkit/core/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace qmkit::dynamics {

RealMatrix pauli_generator(const ComplexMatrix& coupling, double nu) {
    if (coupling.rows() != coupling.cols())
        throw std::invalid_argument("pauli_generator: coupling matrix must be square");
    const int n = static_cast<int>(coupling.rows());
    RealMatrix w = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) w(i, j) = nu * std::norm(coupling(i, j));
    for (int j = 0; j < n; ++j) w(j, j) = -w.col(j).sum();
    return w;
}

RealVector pauli_master(const ComplexMatrix& coupling, double nu,
                        const RealVector& p0, double t) {
    if (p0.minCoeff() < 0.0)
        throw NegativeInputError("pauli_master: probabilities must be non-negative");
    if (std::abs(p0.sum() - 1.0) > 1e-10)
        throw NegativeInputError("pauli_master: probabilities must sum to 1");
    const RealMatrix w = pauli_generator(coupling, nu);
    if (w.rows() != p0.size())
        throw std::invalid_argument("pauli_master: dimension mismatch");
    RealVector p = (w * t).exp() * p0;
    // round-off can leave tiny negative entries
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = std::max(p(i), 0.0);
    p /= p.sum();
    return p;
}

ComplexMatrix adiabatic_coupling(const std::function<ComplexMatrix(double)>& hamiltonian,
                                 double x, double dx) {
    const ComplexMatrix h = hamiltonian(x);
    const EigenDecomposition ed = hermitian_eig(h);
    const Eigen::Index n = ed.values.size();

    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        if (ed.values(i + 1) - ed.values(i) < 1e-8 * scale)
            throw DegenerateSpectrumError("adiabatic_coupling: spectrum is degenerate");

    const ComplexMatrix v =
        (hamiltonian(x + dx) - hamiltonian(x - dx)) / (2.0 * dx);
    const ComplexMatrix v_eig = ed.vectors.adjoint() * v * ed.vectors;

    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (i != j) a(i, j) = I * v_eig(i, j) / (ed.values(j) - ed.values(i));
    return a;
}

}  // namespace qmkit::dynamics
