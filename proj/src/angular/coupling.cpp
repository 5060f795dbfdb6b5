#include "qmkit/angular/coupling.hpp"

#include <cmath>

namespace qmkit::angular {

namespace {

// orthonormal complement of `known` inside the floor spanned by `floor_idx`,
// taken deterministically by Gram-Schmidt over the floor basis vectors in
// their natural (descending m1) order
RealVector floor_complement(const std::vector<RealVector>& known,
                            const std::vector<int>& floor_idx, int dim) {
    for (int p : floor_idx) {
        RealVector v = RealVector::Zero(dim);
        v(p) = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const RealVector& k : known) v -= k.dot(v) * k;
        const double n = v.norm();
        if (n > 1e-8) return v / n;
    }
    throw std::logic_error("add_angular_momentum: degenerate floor (internal error)");
}

}  // namespace

CGDecomposition add_angular_momentum(int two_j1, int two_j2) {
    if (two_j1 < 0 || two_j2 < 0)
        throw InvalidJError("add_angular_momentum: 2j must be non-negative");

    const SpinRepresentation rep1 = build_spin_rep(two_j1);
    const SpinRepresentation rep2 = build_spin_rep(two_j2);
    const int d1 = rep1.dim(), d2 = rep2.dim(), dim = d1 * d2;

    const ComplexMatrix jminus_c =
        kron(rep1.jminus, ComplexMatrix::Identity(d2, d2)) +
        kron(ComplexMatrix::Identity(d1, d1), rep2.jminus);
    const RealMatrix jminus = jminus_c.real();  // ladder matrices are real

    // twice-m_j of every product basis state
    std::vector<int> two_mj_of(dim);
    for (int i1 = 0; i1 < d1; ++i1)
        for (int i2 = 0; i2 < d2; ++i2)
            two_mj_of[i1 * d2 + i2] = (two_j1 - 2 * i1) + (two_j2 - 2 * i2);

    CGDecomposition out;
    out.two_j1 = two_j1;
    out.two_j2 = two_j2;
    out.t = RealMatrix::Zero(dim, dim);

    // states found so far, grouped by their m_j floor
    std::vector<std::vector<RealVector>> by_floor;  // index = (two_j1+two_j2 - two_mj)/2
    by_floor.resize(two_j1 + two_j2 + 1);

    int col = 0;
    for (int two_j = two_j1 + two_j2; two_j >= std::abs(two_j1 - two_j2); two_j -= 2) {
        out.two_multiplets.push_back(two_j);

        RealVector head;
        if (two_j == two_j1 + two_j2) {
            head = RealVector::Zero(dim);
            head(0) = 1.0;  // |m1=j1, m2=j2>
        } else {
            std::vector<int> floor_idx;
            for (int p = 0; p < dim; ++p)
                if (two_mj_of[p] == two_j) floor_idx.push_back(p);
            head = floor_complement(by_floor[(two_j1 + two_j2 - two_j) / 2], floor_idx, dim);
        }
        // phase: component with maximal m1 (smallest product index on the floor)
        for (int p = 0; p < dim; ++p) {
            if (two_mj_of[p] == two_j && std::abs(head(p)) > 1e-8) {
                if (head(p) < 0.0) head = -head;
                break;
            }
        }

        RealVector state = head;
        for (int two_mj = two_j; two_mj >= -two_j; two_mj -= 2) {
            out.t.col(col++) = state;
            by_floor[(two_j1 + two_j2 - two_mj) / 2].push_back(state);
            if (two_mj > -two_j) {
                state = jminus * state;
                state /= state.norm();
            }
        }
    }
    return out;
}

RealMatrix j_squared_product_basis(const CGDecomposition& decomp) {
    const int dim = decomp.t.rows();
    RealVector diag(dim);
    int col = 0;
    for (int two_j : decomp.two_multiplets) {
        const double j = 0.5 * two_j;
        for (int k = 0; k <= two_j; ++k) diag(col++) = j * (j + 1.0);
    }
    return decomp.t * diag.asDiagonal() * decomp.t.transpose();
}

double wigner_3j(int two_l, int two_s, int two_j, int two_ml, int two_ms, int two_m) {
    if (two_ml + two_ms - two_m != 0) return 0.0;
    if (two_j < std::abs(two_l - two_s) || two_j > two_l + two_s) return 0.0;
    if ((two_l + two_s + two_j) % 2 != 0) return 0.0;
    if (std::abs(two_ml) > two_l || std::abs(two_ms) > two_s || std::abs(two_m) > two_j)
        return 0.0;
    if ((two_l - two_ml) % 2 != 0 || (two_s - two_ms) % 2 != 0 || (two_j - two_m) % 2 != 0)
        return 0.0;

    const CGDecomposition decomp = add_angular_momentum(two_l, two_s);
    const int d2 = two_s + 1;
    const int row = ((two_l - two_ml) / 2) * d2 + (two_s - two_ms) / 2;
    int col = 0;
    for (int tj : decomp.two_multiplets) {
        if (tj == two_j) {
            col += (two_j - two_m) / 2;
            break;
        }
        col += tj + 1;
    }
    const double t = decomp.t(row, col);
    const int phase_exp = (two_l - two_s + two_m) / 2;
    const double phase = (phase_exp % 2 == 0) ? 1.0 : -1.0;
    return phase * t / std::sqrt(two_j + 1.0);
}

}  // namespace qmkit::angular
