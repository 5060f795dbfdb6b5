// register.hpp -- small state-vector simulator: qubit register, one/two/
// three-qubit gates, Hadamard and Fourier transforms.
//
// Bit order: qubit 0 is the least significant bit of the basis index,
// x = sum x_r 2^r.

#pragma once

#include "qmkit/core/types.hpp"

#include <cstdint>
#include <vector>

namespace qmkit::qc {

struct IndexOutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct DuplicateIndexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Gate { T, S, Z, X, Y, H, R };

struct QubitRegister {
    int qubits = 1;
    ComplexVector amplitudes;

    explicit QubitRegister(int n_qubits)
        : qubits(n_qubits), amplitudes(ComplexVector::Zero(int64_t(1) << n_qubits)) {
        amplitudes(0) = 1.0;
    }

    int64_t dim() const { return amplitudes.size(); }
    void reset() {
        amplitudes.setZero();
        amplitudes(0) = 1.0;
    }
    void set_basis_state(int64_t x) {
        amplitudes.setZero();
        amplitudes(x) = 1.0;
    }
    double norm() const { return amplitudes.norm(); }
};

// the 2x2 matrix of a named gate
ComplexMatrix gate_matrix(Gate g);

void apply_gate(QubitRegister& reg, Gate g, int target);
void apply_unitary(QubitRegister& reg, const ComplexMatrix& u, int target);
// apply u on `target` when all `controls` are set
void controlled_apply(QubitRegister& reg, const ComplexMatrix& u,
                      const std::vector<int>& controls, int target);

void cnot(QubitRegister& reg, int control, int target);
void toffoli(QubitRegister& reg, int c1, int c2, int target);
void swap_via_cnots(QubitRegister& reg, int a, int b);

// Hadamard on every qubit of the subregister [begin, begin + count)
void hadamard_all(QubitRegister& reg, int begin, int count);

// U_F |x> = (1/sqrt(Nc)) sum_k exp(-i 2 pi k x / Nc) |k> on the subregister,
// implemented as the standard butterfly circuit (conjugate-sign convention)
void qft(QubitRegister& reg, int begin, int count);

// dense QFT matrix for cross-checks
ComplexMatrix qft_matrix(int n_qubits);

}  // namespace qmkit::qc
