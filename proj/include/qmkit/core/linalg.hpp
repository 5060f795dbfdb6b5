// linalg.hpp -- dense Hermitian eigen-services, unitary propagation,
// Kronecker products and partial traces.  All operations are pure functions
// on value data; no shared mutable state.

#pragma once

#include "qmkit/core/types.hpp"

#include <vector>

namespace qmkit {

struct EigenDecomposition {
    RealVector values;     // ascending
    ComplexMatrix vectors; // orthonormal eigenvectors in matching columns
};

// Hermitian eigendecomposition.  Throws NonSquareError / NonHermitianError.
// Within a degenerate cluster the individual vectors are an arbitrary
// orthonormal choice; only subspace projectors are reproducible.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double herm_tol = 1e-12);

// U(t) = exp(-i t H) for Hermitian H, computed through the spectral
// decomposition.
ComplexMatrix evolve_unitary(const ComplexMatrix& hamiltonian, double t);

// Kronecker product, row index = (i_A * rows_B + i_B): the first factor is
// the slow index, |i, alpha> ordering.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class KeepSide { A, B };

// Reduce a density matrix on a (dim_a * dim_b)-dimensional product space by
// tracing out the discarded factor.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b, KeepSide keep);

}  // namespace qmkit
