#include "qmkit/angular/zeeman.hpp"

namespace qmkit::angular {

GFactors wigner_eckart_g(int two_j, int two_l, int two_s) {
    if (two_j < std::abs(two_l - two_s) || two_j > two_l + two_s ||
        (two_l + two_s + two_j) % 2 != 0)
        throw TriangleViolationError("wigner_eckart_g: (j,l,s) not triangle-compatible");
    if (two_j == 0)
        throw TriangleViolationError("wigner_eckart_g: j = 0 has no projection factors");
    const double j = 0.5 * two_j, l = 0.5 * two_l, s = 0.5 * two_s;
    const double jj = j * (j + 1.0);
    GFactors f;
    f.g_l = (jj + l * (l + 1.0) - s * (s + 1.0)) / (2.0 * jj);
    f.g_s = (jj + s * (s + 1.0) - l * (l + 1.0)) / (2.0 * jj);
    return f;
}

ComplexMatrix zeeman_hamiltonian(double v, double g, double h) {
    const SpinRepresentation lrep = build_spin_rep(2);  // l = 1
    const SpinRepresentation srep = build_spin_rep(1);  // s = 1/2
    const ComplexMatrix id_l = ComplexMatrix::Identity(3, 3);
    const ComplexMatrix id_s = ComplexMatrix::Identity(2, 2);

    const ComplexMatrix lz = kron(lrep.jz, id_s);
    const ComplexMatrix sz = kron(id_l, srep.jz);
    const ComplexMatrix ls = kron(lrep.jx, srep.jx) + kron(lrep.jy, srep.jy) +
                             kron(lrep.jz, srep.jz);
    return h * lz + g * h * sz + v * ls;
}

std::vector<RealVector> zeeman_spectrum(double v, double g,
                                        const std::vector<double>& h_values) {
    std::vector<RealVector> out;
    out.reserve(h_values.size());
    for (double h : h_values)
        out.push_back(hermitian_eig(zeeman_hamiltonian(v, g, h)).values);
    return out;
}

}  // namespace qmkit::angular
