// zeeman.hpp -- Wigner-Eckart projection factors and the l=1, s=1/2
// Zeeman 6x6 analysis.

#pragma once

#include "qmkit/angular/spin.hpp"

#include <vector>

namespace qmkit::angular {

struct TriangleViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GFactors {
    double g_l;
    double g_s;  // g_l + g_s = 1 exactly
};

// g_L = (j(j+1)+l(l+1)-s(s+1)) / (2 j(j+1)), g_S likewise with l <-> s.
// Arguments are twice-integers.
GFactors wigner_eckart_g(int two_j, int two_l, int two_s);

// H = h Lz + g h Sz + v L.S on the l=1 x s=1/2 product space (|m_l, m_s>
// basis, m_l slow).  Returns the sorted 6 eigenvalues for each field value.
std::vector<RealVector> zeeman_spectrum(double v, double g,
                                        const std::vector<double>& h_values);

// The 6x6 Hamiltonian itself at a single field value.
ComplexMatrix zeeman_hamiltonian(double v, double g, double h);

}  // namespace qmkit::angular
