#include "qmkit/fock/info.hpp"

#include <cmath>

namespace qmkit::fock {

BipartiteState BipartiteState::from_vector(const ComplexVector& psi, int dim_a, int dim_b) {
    if (psi.size() != static_cast<Eigen::Index>(dim_a) * dim_b)
        throw DimensionMismatchError("BipartiteState: dimension mismatch");
    BipartiteState out;
    out.amplitudes.resize(dim_a, dim_b);
    for (int i = 0; i < dim_a; ++i)
        for (int alpha = 0; alpha < dim_b; ++alpha)
            out.amplitudes(i, alpha) = psi(i * dim_b + alpha);
    return out;
}

ComplexMatrix reduce(const BipartiteState& psi, KeepSide keep) {
    const ComplexMatrix& w = psi.amplitudes;
    if (keep == KeepSide::A) return w * w.adjoint();
    return (w.adjoint() * w).transpose();
}

SchmidtDecomposition schmidt(const BipartiteState& psi) {
    Eigen::JacobiSVD<ComplexMatrix> svd(psi.amplitudes,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
    const int rank = static_cast<int>(svd.singularValues().size());
    SchmidtDecomposition out;
    out.a_vectors = svd.matrixU();
    out.b_vectors = svd.matrixV().conjugate();
    for (int r = 0; r < rank; ++r) {
        const double s = svd.singularValues()(r);
        out.p.push_back(s * s);
        // deterministic phase: first sizable component of the A vector is
        // positive real
        for (int i = 0; i < out.a_vectors.rows(); ++i) {
            const Complex c = out.a_vectors(i, r);
            if (std::abs(c) > 1e-12) {
                const Complex phase = std::conj(c) / std::abs(c);
                out.a_vectors.col(r) *= phase;
                out.b_vectors.col(r) *= std::conj(phase);
                break;
            }
        }
    }
    return out;
}

double entropy(const ComplexMatrix& rho) {
    const EigenDecomposition ed = hermitian_eig(rho, 1e-10);
    double s = 0.0;
    for (Eigen::Index k = 0; k < ed.values.size(); ++k) {
        const double p = ed.values(k);
        if (p > 1e-14) s -= p * std::log(p);
    }
    return s;
}

namespace {

ComplexMatrix sigma_theta(double theta) {
    // cos(theta) sigma_z + sin(theta) sigma_x
    ComplexMatrix s(2, 2);
    s << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
    return s;
}

}  // namespace

double singlet_correlation(double theta_a, double theta_b) {
    ComplexVector singlet(4);
    singlet << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
    const ComplexMatrix witness = kron(sigma_theta(theta_a), sigma_theta(theta_b));
    return (singlet.adjoint() * witness * singlet)(0).real();
}

double chsh(double theta_a, double theta_b, double theta_a2, double theta_b2) {
    return singlet_correlation(theta_a, theta_b) + singlet_correlation(theta_a, theta_b2) +
           singlet_correlation(theta_a2, theta_b) -
           singlet_correlation(theta_a2, theta_b2);
}

MeasurementResult measure(const ComplexMatrix& rho,
                          const std::vector<ComplexMatrix>& projectors) {
    const Eigen::Index d = rho.rows();
    ComplexMatrix total = ComplexMatrix::Zero(d, d);
    for (size_t a = 0; a < projectors.size(); ++a) {
        const ComplexMatrix& p = projectors[a];
        if (p.rows() != d || p.cols() != d)
            throw IncompleteProjectorsError("measure: projector dimension mismatch");
        if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10)
            throw IncompleteProjectorsError("measure: projector not idempotent");
        for (size_t b = 0; b < a; ++b)
            if ((p * projectors[b]).cwiseAbs().maxCoeff() > 1e-10)
                throw IncompleteProjectorsError("measure: projectors not orthogonal");
        total += p;
    }
    if ((total - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
        throw IncompleteProjectorsError("measure: projectors do not resolve the identity");

    MeasurementResult out;
    out.post_state = ComplexMatrix::Zero(d, d);
    for (const ComplexMatrix& p : projectors) {
        const ComplexMatrix projected = p * rho * p;
        out.probabilities.push_back(projected.trace().real());
        out.post_state += projected;
    }
    return out;
}

}  // namespace qmkit::fock
