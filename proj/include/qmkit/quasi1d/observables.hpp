// observables.hpp -- scattering-region density of states, the quasi-1D Green
// function, and the coupling matrix elements of walls and junctions.

#pragma once

#include "qmkit/core/types.hpp"
#include "qmkit/quasi1d/scatter.hpp"

#include <functional>

namespace qmkit::quasi1d {

// rho(E) = (1/2 pi i) trace(dS/dE S^dagger) by central difference; the
// result is real within discretization error and is returned as such.
double friedel_dos(const std::function<ComplexMatrix(double)>& s_of_e, double energy,
                   double de);

// Retarded Green function on a line with an optional delta scatterer of
// strength u at the origin:
// G(x|x0) = -(i/v)[ e^{ik|x-x0|} + r e^{ik(|x|+|x0|)} ].
Complex green_1d(double energy, double x, double x0, double u = 0.0, double mass = 1.0);

// V_nm = -(pi^2/(m L^3)) n m, the wall-displacement matrix element
double wall_shift_matrix(int n, int m, double length, double mass = 1.0);

// W_nm = -(1/(4 m^2 u)) [dpsi_n/dr] [dpsi_m/dr] at the junction
double junction_coupling(double dpsi_n, double dpsi_m, double u, double mass = 1.0);

// Omega = (v_E / a) sqrt(g), the symmetric double-well splitting frequency
double double_well_splitting(double a, double g, double energy, double mass = 1.0);

}  // namespace qmkit::quasi1d
