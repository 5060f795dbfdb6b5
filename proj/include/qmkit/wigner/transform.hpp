// transform.hpp -- Wigner transform of grid density matrices and the
// phase-space trace formulas.
//
// Grid conventions: a state lives on N equispaced points x_j = x0 + j dx.
// The transform is evaluated on the doubled-resolution diagonal grid
// X_s = x0 + s dx/2 (s = 0 .. 2N-2), where the off-diagonal samples
// rho(X + r/2, X - r/2) land exactly on grid points with r-step 2 dx;
// nothing is interpolated.  The conjugate momentum grid carries N points
// spaced 2 pi / (2N dx) so that the transform is exactly invertible.
// Phase-space integrals use the measure dX dP / 2pi with dX = dx/2.

#pragma once

#include "qmkit/core/types.hpp"

namespace qmkit::wigner {

struct NonHermitianInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EdgeDecayError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WindowTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// density matrix rho(x', x'') on the grid, trace(rho) dx = 1
struct GridState {
    double x0 = 0.0;
    double dx = 1.0;
    ComplexMatrix rho;

    int points() const { return static_cast<int>(rho.rows()); }
    double x(int j) const { return x0 + j * dx; }
    double trace() const { return rho.trace().real() * dx; }

    static GridState from_wavefunction(double x0, double dx, const ComplexVector& psi);
    static GridState mixture(const GridState& a, const GridState& b, double weight_a);
};

struct PhaseSpaceFunction {
    double x0 = 0.0;
    double dx = 0.5;  // X-grid step (half the state grid step)
    double p0 = 0.0;
    double dp = 1.0;
    RealMatrix values;  // rows: X index, cols: P index

    int nx() const { return static_cast<int>(values.rows()); }
    int np() const { return static_cast<int>(values.cols()); }
    double x(int s) const { return x0 + s * dx; }
    double p(int p_idx) const { return p0 + p_idx * dp; }
    double measure() const { return dx * dp / (2.0 * M_PI); }

    double integral() const { return values.sum() * measure(); }
    // marginal over P at each X row (against dP/2pi)
    RealVector position_marginal() const;
    // marginal over X at each P column (against dX)
    RealVector momentum_marginal() const;
};

// rho_W(X, P) = Int rho(X + r/2, X - r/2) e^{-iPr} dr on the grid.  The
// input must be Hermitian and decay below 1e-8 (relative) at the window
// edges; the output is real within transform round-off.
PhaseSpaceFunction wigner_transform(const GridState& state);

// exact inverse of wigner_transform on its own grids
GridState inverse_wigner(const PhaseSpaceFunction& w);

// trace(A rho) = Sum A_W W dX dP / 2pi for identical grids
double weyl_expectation(const PhaseSpaceFunction& a_w, const PhaseSpaceFunction& rho_w);

// trace(rho^2), from the matrix or from the phase-space square
double purity(const GridState& state);
double purity(const PhaseSpaceFunction& w);

}  // namespace qmkit::wigner
