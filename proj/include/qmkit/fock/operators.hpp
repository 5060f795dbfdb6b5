// operators.hpp -- one- and two-body additive operators on Fock bases, and
// Slater-determinant expectation values (direct minus exchange).

#pragma once

#include "qmkit/fock/basis.hpp"

#include <vector>

namespace qmkit::fock {

struct SymmetryViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// two-body tensor U_{k'l',kl} stored row-major over (k', l', k, l)
struct TwoBodyTensor {
    int orbitals = 1;
    std::vector<double> u;

    double operator()(int kp, int lp, int k, int l) const {
        return u[((static_cast<size_t>(kp) * orbitals + lp) * orbitals + k) * orbitals + l];
    }
    double& at(int kp, int lp, int k, int l) {
        return u[((static_cast<size_t>(kp) * orbitals + lp) * orbitals + k) * orbitals + l];
    }
    static TwoBodyTensor zero(int orbitals) {
        TwoBodyTensor t;
        t.orbitals = orbitals;
        t.u.assign(static_cast<size_t>(orbitals) * orbitals * orbitals * orbitals, 0.0);
        return t;
    }
};

// V = sum a_k'^dag h_{k'k} a_k; h must be Hermitian
ComplexMatrix one_body_operator(const FockBasis& basis, const ComplexMatrix& h);

// U = (1/2) sum a_k'^dag a_l'^dag U_{k'l',kl} a_l a_k; the tensor must obey
// U_{k'l',kl} = U_{kl,k'l'} (real Hermitian case)
ComplexMatrix two_body_operator(const FockBasis& basis, const TwoBodyTensor& u);

// <R|U|R> = (1/2) sum_{k,l in R} (<kl|U|kl> - <lk|U|kl>) for a fermionic
// determinant over the occupied orbital set
double slater_expectation(const std::vector<int>& occupied, const TwoBodyTensor& u);

}  // namespace qmkit::fock
