#include "qmkit/qc/register.hpp"

#include <cmath>

namespace qmkit::qc {

ComplexMatrix gate_matrix(Gate g) {
    ComplexMatrix m(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (g) {
        case Gate::T:
            m << 1, 0, 0, std::exp(I * M_PI / 4.0);
            break;
        case Gate::S:
            m << 1, 0, 0, I;
            break;
        case Gate::Z:
            m << 1, 0, 0, -1;
            break;
        case Gate::X:
            m << 0, 1, 1, 0;
            break;
        case Gate::Y:
            m << 0, -I, I, 0;
            break;
        case Gate::H:
            m << r, r, r, -r;
            break;
        case Gate::R:
            m << r, -r, r, r;
            break;
    }
    return m;
}

namespace {

void check_target(const QubitRegister& reg, int target) {
    if (target < 0 || target >= reg.qubits)
        throw IndexOutOfRangeError("qubit index out of range");
}

}  // namespace

void apply_unitary(QubitRegister& reg, const ComplexMatrix& u, int target) {
    check_target(reg, target);
    const int64_t stride = int64_t(1) << target;
    for (int64_t base = 0; base < reg.dim(); ++base) {
        if (base & stride) continue;
        const int64_t partner = base | stride;
        const Complex a0 = reg.amplitudes(base);
        const Complex a1 = reg.amplitudes(partner);
        reg.amplitudes(base) = u(0, 0) * a0 + u(0, 1) * a1;
        reg.amplitudes(partner) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void apply_gate(QubitRegister& reg, Gate g, int target) {
    apply_unitary(reg, gate_matrix(g), target);
}

void controlled_apply(QubitRegister& reg, const ComplexMatrix& u,
                      const std::vector<int>& controls, int target) {
    check_target(reg, target);
    int64_t control_mask = 0;
    for (int c : controls) {
        check_target(reg, c);
        if (c == target) throw DuplicateIndexError("controlled_apply: control == target");
        control_mask |= int64_t(1) << c;
    }
    const int64_t stride = int64_t(1) << target;
    for (int64_t base = 0; base < reg.dim(); ++base) {
        if (base & stride) continue;
        if ((base & control_mask) != control_mask) continue;
        const int64_t partner = base | stride;
        const Complex a0 = reg.amplitudes(base);
        const Complex a1 = reg.amplitudes(partner);
        reg.amplitudes(base) = u(0, 0) * a0 + u(0, 1) * a1;
        reg.amplitudes(partner) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void cnot(QubitRegister& reg, int control, int target) {
    if (control == target) throw DuplicateIndexError("cnot: control == target");
    controlled_apply(reg, gate_matrix(Gate::X), {control}, target);
}

void toffoli(QubitRegister& reg, int c1, int c2, int target) {
    if (c1 == c2 || c1 == target || c2 == target)
        throw DuplicateIndexError("toffoli: indices must be distinct");
    controlled_apply(reg, gate_matrix(Gate::X), {c1, c2}, target);
}

void swap_via_cnots(QubitRegister& reg, int a, int b) {
    if (a == b) throw DuplicateIndexError("swap_via_cnots: identical qubits");
    cnot(reg, a, b);
    cnot(reg, b, a);
    cnot(reg, a, b);
}

void hadamard_all(QubitRegister& reg, int begin, int count) {
    for (int q = begin; q < begin + count; ++q) apply_gate(reg, Gate::H, q);
}

void qft(QubitRegister& reg, int begin, int count) {
    // butterfly with conjugated phase gates for the e^{-2 pi i k x / Nc}
    // convention, then the bit-reversal swaps
    for (int j = count - 1; j >= 0; --j) {
        apply_gate(reg, Gate::H, begin + j);
        for (int m = j - 1; m >= 0; --m) {
            ComplexMatrix phase = ComplexMatrix::Identity(2, 2);
            phase(1, 1) = std::exp(-I * M_PI / double(int64_t(1) << (j - m)));
            controlled_apply(reg, phase, {begin + m}, begin + j);
        }
    }
    for (int j = 0; j < count / 2; ++j)
        swap_via_cnots(reg, begin + j, begin + count - 1 - j);
}

ComplexMatrix qft_matrix(int n_qubits) {
    const int64_t n = int64_t(1) << n_qubits;
    ComplexMatrix m(n, n);
    for (int64_t k = 0; k < n; ++k)
        for (int64_t x = 0; x < n; ++x)
            m(k, x) = std::exp(-2.0 * M_PI * I * double(k * x) / double(n)) /
                      std::sqrt(double(n));
    return m;
}

}  // namespace qmkit::qc
