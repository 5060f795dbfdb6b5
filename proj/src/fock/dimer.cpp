#include "qmkit/fock/dimer.hpp"

#include "qmkit/angular/spin.hpp"
#include "qmkit/fock/operators.hpp"

namespace qmkit::fock {

ComplexMatrix bose_hubbard_dimer(int n_total, double interaction, double hopping,
                                 double bias) {
    if (n_total < 1) throw std::invalid_argument("bose_hubbard_dimer: need N >= 1");
    const FockBasis basis = FockBasis::boson_sector(2, n_total);

    ComplexMatrix h1(2, 2);
    h1 << -0.5 * bias, -0.5 * hopping, -0.5 * hopping, 0.5 * bias;
    ComplexMatrix h = one_body_operator(basis, h1);

    TwoBodyTensor u = TwoBodyTensor::zero(2);
    u.at(0, 0, 0, 0) = interaction;
    u.at(1, 1, 1, 1) = interaction;
    h += two_body_operator(basis, u);

    // reorder the sector basis (ascending n1) into the spin order n1 = N..0
    const int d = basis.dim();
    ComplexMatrix reordered(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int i_spin = basis.index.at({n_total - i, i});
            const int j_spin = basis.index.at({n_total - j, j});
            reordered(i, j) = h(i_spin, j_spin);
        }
    return reordered;
}

ComplexMatrix bose_hubbard_dimer_spin(int n_total, double interaction, double hopping,
                                      double bias) {
    const auto rep = angular::build_spin_rep(n_total);
    const double constant =
        0.25 * interaction * n_total * n_total - 0.5 * interaction * n_total;
    return interaction * rep.jz * rep.jz - bias * rep.jz - hopping * rep.jx +
           constant * ComplexMatrix::Identity(n_total + 1, n_total + 1);
}

DimerObservables dimer_observables(const ComplexVector& state, int n_total) {
    if (state.size() != n_total + 1)
        throw DimensionMismatchError("dimer_observables: state dimension must be N+1");
    const auto rep = angular::build_spin_rep(n_total);
    const ComplexVector psi = state / state.norm();

    DimerObservables out;
    const double sx = (psi.adjoint() * rep.jx * psi)(0).real() * 2.0 / n_total;
    const double sy = (psi.adjoint() * rep.jy * psi)(0).real() * 2.0 / n_total;
    const double sz = (psi.adjoint() * rep.jz * psi)(0).real() * 2.0 / n_total;
    out.polarization = Vec3(sx, sy, sz);

    ComplexMatrix sigma_x(2, 2), sigma_y(2, 2), sigma_z(2, 2);
    sigma_x << 0, 1, 1, 0;
    sigma_y << 0, -I, I, 0;
    sigma_z << 1, 0, 0, -1;
    out.rho1 = 0.5 * (ComplexMatrix::Identity(2, 2) + sx * sigma_x + sy * sigma_y +
                      sz * sigma_z);
    out.one_body_purity = 0.5 * (1.0 + out.polarization.squaredNorm());
    return out;
}

}  // namespace qmkit::fock
