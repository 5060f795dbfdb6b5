// born.hpp -- Born differential/total cross sections from the radial Fourier
// transform, free-space Green functions, the regularized delta coupling, and
// the hydrogen level formula.

#pragma once

#include "qmkit/core/types.hpp"
#include "qmkit/spherical/special.hpp"

#include <functional>

namespace qmkit::spherical {

// U~(q) = 4 pi Int U(r) sinc(q r) r^2 dr on [0, r_max]
double radial_fourier(const std::function<double(double)>& potential, double q,
                      double r_max);

// dsigma/dOmega = (m/2pi)^2 |U~(2 k sin(theta/2))|^2
double born_dcs(const std::function<double(double)>& potential, double energy,
                double theta, double mass, double r_max);

// sigma = (1/(2 pi v^2)) Int_0^{2k} |U~(q)|^2 q dq
double born_total(const std::function<double(double)>& potential, double energy,
                  double mass, double r_max);

// retarded free Green functions: 1D -i(m/k) e^{ik|r|}, 2D -i(m/2) H0(kr),
// 3D -(m/2pi r) e^{ikr}
Complex free_green(int dimension, double energy, double r, double mass = 1.0);

// u_eff = u / (1 - u G(E)) with G = -(m/pi^2) Lambda_E,
// Lambda_E = Lambda - (k/2) log((Lambda+k)/(Lambda-k)) + i pi k / 2
Complex regularized_delta_ueff(double u, double cutoff, double energy, double mass = 1.0);

// E = -alpha^2 m / (2 (l + nu)^2), nu = 1, 2, ...
double hydrogen_level(double alpha_coulomb, double mass, int l, int nu);

}  // namespace qmkit::spherical
