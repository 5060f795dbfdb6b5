// coupling.hpp -- addition of angular momentum.
//
// The product basis |m1, m2> is ordered with m1 slow and m2 fast, both
// descending (+j ... -j), matching kron(first, second).  The coupled basis
// |j, m_j> is ordered by descending j, then descending m_j.

#pragma once

#include "qmkit/angular/spin.hpp"

#include <vector>

namespace qmkit::angular {

struct CGDecomposition {
    int two_j1 = 0;
    int two_j2 = 0;
    std::vector<int> two_multiplets;  // 2j values, j1+j2 down to |j1-j2|
    RealMatrix t;                     // |m1,m2> -> |j,m_j>, orthogonal, columns per coupled state
};

// Ladder-and-orthogonalize construction: the top state |j1+j2, j1+j2> is
// |j1, j2>, each multiplet is filled by repeated J- with normalization, and
// each new multiplet head is the orthogonal complement on its m_j = j floor.
// Phase convention: in each head state the coefficient of the component with
// maximal m1 is positive.
CGDecomposition add_angular_momentum(int two_j1, int two_j2);

// J^2 in the product basis: T diag(j(j+1)) T^t, Hermitian.
RealMatrix j_squared_product_basis(const CGDecomposition& decomp);

// 3j-symbol ( l  s  j ; m_l  m_s  -m ) through the transformation-matrix
// relation T = (-1)^(l-s+m) sqrt(2j+1) * (3j), with this module's CG phase
// convention.  Selection-rule violations return 0.  Arguments are
// twice-integers.
double wigner_3j(int two_l, int two_s, int two_j, int two_ml, int two_ms, int two_m);

}  // namespace qmkit::angular
