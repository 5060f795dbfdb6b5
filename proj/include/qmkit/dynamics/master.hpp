// master.hpp -- Pauli rate equation and the adiabatic-basis coupling matrix.

#pragma once

#include "qmkit/core/types.hpp"

#include <functional>

namespace qmkit::dynamics {

struct NegativeInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dp/dt = W p with rates w_nm = nu |W_nm|^2 and decay constants balancing
// the columns exactly (probability conserved by construction).  Evolves p0
// by the matrix exponential.
RealVector pauli_master(const ComplexMatrix& coupling, double nu,
                        const RealVector& p0, double t);

// The generator itself (for rate inspection).
RealMatrix pauli_generator(const ComplexMatrix& coupling, double nu);

// A_nm = i V_nm / (E_m - E_n) in the eigenbasis of H(X), with
// V = (H(X+dX) - H(X-dX)) / (2 dX).  Requires a non-degenerate spectrum
// (gap > 1e-8 * ||H||).
ComplexMatrix adiabatic_coupling(const std::function<ComplexMatrix(double)>& hamiltonian,
                                 double x, double dx);

}  // namespace qmkit::dynamics
