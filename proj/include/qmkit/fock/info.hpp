// info.hpp -- bipartite reductions, Schmidt decomposition, entropies, the
// singlet correlator with its CHSH combination, and projective measurement
// channels.

#pragma once

#include "qmkit/core/linalg.hpp"

#include <vector>

namespace qmkit::fock {

struct IncompleteProjectorsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// pure bipartite state Psi_{i alpha} held as an N_A x N_B matrix
struct BipartiteState {
    ComplexMatrix amplitudes;

    int dim_a() const { return static_cast<int>(amplitudes.rows()); }
    int dim_b() const { return static_cast<int>(amplitudes.cols()); }
    double norm() const { return amplitudes.norm(); }

    static BipartiteState from_vector(const ComplexVector& psi, int dim_a, int dim_b);
};

ComplexMatrix reduce(const BipartiteState& psi, KeepSide keep);

struct SchmidtDecomposition {
    std::vector<double> p;         // descending, sums to 1
    ComplexMatrix a_vectors;       // columns
    ComplexMatrix b_vectors;       // columns
};
SchmidtDecomposition schmidt(const BipartiteState& psi);

// von Neumann entropy -trace(rho log rho) in nats, 0 log 0 = 0
double entropy(const ComplexMatrix& rho);
inline double entropy_bits(const ComplexMatrix& rho) { return entropy(rho) / std::log(2.0); }

// <sigma_thetaA (x) sigma_thetaB> on the explicit two-spin singlet;
// equals -cos(thetaA - thetaB)
double singlet_correlation(double theta_a, double theta_b);

// C(a,b) + C(a,b') + C(a',b) - C(a',b')
double chsh(double theta_a, double theta_b, double theta_a2, double theta_b2);

struct MeasurementResult {
    std::vector<double> probabilities;
    ComplexMatrix post_state;  // sum_a P_a rho P_a
};

// ideal projective measurement channel; projectors must be orthogonal and
// complete within 1e-10
MeasurementResult measure(const ComplexMatrix& rho,
                          const std::vector<ComplexMatrix>& projectors);

}  // namespace qmkit::fock
