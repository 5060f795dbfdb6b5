// dimer.hpp -- the N-boson two-site system and its spin-j mapping.

#pragma once

#include "qmkit/core/types.hpp"

namespace qmkit::fock {

// H = sum_i [eps_i n_i + (U/2) n_i (n_i - 1)] - (K/2)(a2+ a1 + a1+ a2) on
// the fixed-N sector, returned in the |n1> basis ordered n1 = N .. 0
// (equivalently the spin basis m = +j .. -j with J_z = (n1 - n2)/2).
// Site energies are eps_1 = -eps/2, eps_2 = +eps/2.
ComplexMatrix bose_hubbard_dimer(int n_total, double interaction, double hopping,
                                 double bias);

// the same Hamiltonian through the spin mapping
// U J_z^2 - eps J_z - K J_x + const
ComplexMatrix bose_hubbard_dimer_spin(int n_total, double interaction, double hopping,
                                      double bias);

struct DimerObservables {
    Vec3 polarization;        // <S> with S_i = (2/N) J_i
    ComplexMatrix rho1;       // one-body reduced matrix (1/2)(1 + <S>.sigma)
    double one_body_purity;   // (1/2)(1 + |<S>|^2)
};

DimerObservables dimer_observables(const ComplexVector& state, int n_total);

}  // namespace qmkit::fock
