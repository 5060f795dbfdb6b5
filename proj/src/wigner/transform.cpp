#include "qmkit/wigner/transform.hpp"

#include <cmath>

namespace qmkit::wigner {

GridState GridState::from_wavefunction(double x0, double dx, const ComplexVector& psi) {
    GridState out;
    out.x0 = x0;
    out.dx = dx;
    const double norm2 = psi.squaredNorm() * dx;
    const ComplexVector normalized = psi / std::sqrt(norm2);
    out.rho = normalized * normalized.adjoint();
    return out;
}

GridState GridState::mixture(const GridState& a, const GridState& b, double weight_a) {
    if (a.points() != b.points() || a.dx != b.dx || a.x0 != b.x0)
        throw GridMismatchError("GridState::mixture: incompatible grids");
    GridState out = a;
    out.rho = weight_a * a.rho + (1.0 - weight_a) * b.rho;
    return out;
}

PhaseSpaceFunction wigner_transform(const GridState& state) {
    const int n = state.points();
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("wigner_transform: need an even number of grid points");
    if (hermiticity_defect(state.rho) > 1e-10 * std::max(1.0, state.rho.cwiseAbs().maxCoeff()))
        throw NonHermitianInputError("wigner_transform: density matrix not Hermitian");

    const double peak = state.rho.diagonal().real().maxCoeff();
    const double edge = std::max(state.rho(0, 0).real(), state.rho(n - 1, n - 1).real());
    if (edge > 1e-8 * peak)
        throw EdgeDecayError("wigner_transform: state does not decay at the window edges");

    PhaseSpaceFunction w;
    w.x0 = state.x0;
    w.dx = 0.5 * state.dx;
    w.dp = 2.0 * M_PI / (2.0 * n * state.dx);
    w.p0 = -0.5 * n * w.dp;
    w.values.resize(2 * n - 1, n);

    for (int s = 0; s <= 2 * n - 2; ++s) {
        const int j_lo = std::max(0, s - (n - 1));
        const int j_hi = std::min(n - 1, s);
        for (int p_idx = 0; p_idx < n; ++p_idx) {
            const double p = w.p(p_idx);
            Complex acc = 0.0;
            for (int j = j_lo; j <= j_hi; ++j) {
                const double r = (2 * j - s) * state.dx;
                acc += state.rho(j, s - j) * std::exp(-I * p * r);
            }
            w.values(s, p_idx) = (acc * 2.0 * state.dx).real();
        }
    }
    return w;
}

GridState inverse_wigner(const PhaseSpaceFunction& w) {
    const int n = w.np();
    if (w.nx() != 2 * n - 1)
        throw GridMismatchError("inverse_wigner: grids are not a transform pair");

    GridState state;
    state.x0 = w.x0;
    state.dx = 2.0 * w.dx;
    state.rho = ComplexMatrix::Zero(n, n);
    const double pref = w.dp / (2.0 * M_PI);
    for (int j = 0; j < n; ++j) {
        for (int jp = 0; jp < n; ++jp) {
            const int s = j + jp;
            const double r = (j - jp) * state.dx;
            Complex acc = 0.0;
            for (int p_idx = 0; p_idx < n; ++p_idx)
                acc += w.values(s, p_idx) * std::exp(I * w.p(p_idx) * r);
            state.rho(j, jp) = acc * pref;
        }
    }
    return state;
}

RealVector PhaseSpaceFunction::position_marginal() const {
    return values.rowwise().sum() * dp / (2.0 * M_PI);
}

RealVector PhaseSpaceFunction::momentum_marginal() const {
    return values.colwise().sum().transpose() * dx;
}

double weyl_expectation(const PhaseSpaceFunction& a_w, const PhaseSpaceFunction& rho_w) {
    if (a_w.nx() != rho_w.nx() || a_w.np() != rho_w.np() || a_w.dx != rho_w.dx ||
        a_w.dp != rho_w.dp)
        throw GridMismatchError("weyl_expectation: phase-space grids differ");
    return (a_w.values.array() * rho_w.values.array()).sum() * rho_w.measure();
}

double purity(const GridState& state) {
    return (state.rho * state.rho).trace().real() * state.dx * state.dx;
}

double purity(const PhaseSpaceFunction& w) { return weyl_expectation(w, w); }

}  // namespace qmkit::wigner
