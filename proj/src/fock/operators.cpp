#include "qmkit/fock/operators.hpp"

#include <cmath>

namespace qmkit::fock {

namespace {

double string_sign(const std::vector<int>& occ, int r) {
    int count = 0;
    for (int s = r + 1; s < static_cast<int>(occ.size()); ++s) count += occ[s];
    return (count % 2 == 0) ? 1.0 : -1.0;
}

// in-place elementary operators returning the amplitude factor (0 kills the
// term)
double annihilate_in_place(std::vector<int>& occ, int r, Statistics stats) {
    if (occ[r] == 0) return 0.0;
    double amp = std::sqrt(static_cast<double>(occ[r]));
    if (stats == Statistics::Fermion) amp *= string_sign(occ, r);
    --occ[r];
    return amp;
}

double create_in_place(std::vector<int>& occ, int r, Statistics stats, int cap,
                       bool capped) {
    if (stats == Statistics::Fermion && occ[r] == 1) return 0.0;
    if (capped && occ[r] + 1 > cap) return 0.0;
    double amp = std::sqrt(occ[r] + 1.0);
    if (stats == Statistics::Fermion) amp *= string_sign(occ, r);
    ++occ[r];
    return amp;
}

}  // namespace

ComplexMatrix one_body_operator(const FockBasis& basis, const ComplexMatrix& h) {
    if (h.rows() != basis.orbitals || h.cols() != basis.orbitals)
        throw DimensionMismatchError("one_body_operator: h must be orbitals x orbitals");
    if (hermiticity_defect(h) > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff()))
        throw SymmetryViolationError("one_body_operator: h must be Hermitian");

    const int d = basis.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    const bool capped = basis.total_n < 0;
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < basis.orbitals; ++k) {
            for (int kp = 0; kp < basis.orbitals; ++kp) {
                if (h(kp, k) == 0.0) continue;
                std::vector<int> occ = basis.states[i];
                double amp = annihilate_in_place(occ, k, basis.statistics);
                if (amp == 0.0) continue;
                amp *= create_in_place(occ, kp, basis.statistics, basis.cap, capped);
                if (amp == 0.0) continue;
                out(basis.index.at(occ), i) += h(kp, k) * amp;
            }
        }
    }
    return out;
}

ComplexMatrix two_body_operator(const FockBasis& basis, const TwoBodyTensor& u) {
    if (u.orbitals != basis.orbitals)
        throw DimensionMismatchError("two_body_operator: tensor orbital count mismatch");
    const int m = basis.orbitals;
    for (int kp = 0; kp < m; ++kp)
        for (int lp = 0; lp < m; ++lp)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    if (std::abs(u(kp, lp, k, l) - u(k, l, kp, lp)) > 1e-12)
                        throw SymmetryViolationError(
                            "two_body_operator: tensor must be symmetric under "
                            "(k'l') <-> (kl)");

    const int d = basis.dim();
    const bool capped = basis.total_n < 0;
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < m; ++k) {
            for (int l = 0; l < m; ++l) {
                std::vector<int> base = basis.states[i];
                double amp0 = annihilate_in_place(base, k, basis.statistics);
                if (amp0 == 0.0) continue;
                const double amp1 = amp0 * annihilate_in_place(base, l, basis.statistics);
                if (amp1 == 0.0) continue;
                for (int lp = 0; lp < m; ++lp) {
                    for (int kp = 0; kp < m; ++kp) {
                        const double coeff = u(kp, lp, k, l);
                        if (coeff == 0.0) continue;
                        std::vector<int> occ = base;
                        double amp = amp1 * create_in_place(occ, lp, basis.statistics,
                                                            basis.cap, capped);
                        if (amp == 0.0) continue;
                        amp *= create_in_place(occ, kp, basis.statistics, basis.cap, capped);
                        if (amp == 0.0) continue;
                        out(basis.index.at(occ), i) += 0.5 * coeff * amp;
                    }
                }
            }
        }
    }
    return out;
}

double slater_expectation(const std::vector<int>& occupied, const TwoBodyTensor& u) {
    double sum = 0.0;
    for (int k : occupied)
        for (int l : occupied) sum += u(k, l, k, l) - u(l, k, k, l);
    return 0.5 * sum;
}

}  // namespace qmkit::fock
