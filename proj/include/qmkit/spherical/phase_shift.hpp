// phase_shift.hpp -- partial-wave phase shifts of a shielded spherical well
// by log-derivative matching, the first-order (Born) phase shift, and
// low-energy scattering parameters.
//
// Log-derivative conventions: interior_log_derivative works with the full
// radial function R(r) (k_l); the u(r) = r R(r) convention (k~_0) differs by
// 1/a at l = 0 and is exposed separately where needed.

#pragma once

#include "qmkit/core/types.hpp"

#include <functional>
#include <optional>

namespace qmkit::spherical {

struct IntegralDivergedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// V(r) = V Theta(a - r) + U delta(r - a)
struct ShieldedWell {
    double a = 1.0;      // radius
    double floor = 0.0;  // potential floor V (any sign)
    double shield = 0.0; // shield strength U >= 0
    double mass = 1.0;
};

// u(r)-convention log-derivative at the boundary (l = 0 closed form):
// k~_0 = alpha CTG(alpha a) + 2 m U, with CTG = cot above the floor and
// coth below it.
double interior_log_derivative_u(const ShieldedWell& well, double energy);

// R(r)-convention log-derivative for any l: regular interior solution
// (j_l above the floor, i_l below, r^l at the crossover) plus the 2 m U
// shield boost.
double interior_log_derivative(const ShieldedWell& well, double energy, int l);

// tan(delta) = -(k_l j - k_E j') / (k_l n - k_E n') evaluated at k_E a;
// principal value in (-pi/2, pi/2].
double phase_shift(double k_l, int l, double energy, double a, double mass = 1.0);

// delta_l of the hard sphere, tan(delta) = -j/n
double hard_sphere_phase_shift(int l, double ka);

// first-order phase shift -(2/v_E) Int V(r) (k r j_l(k r))^2 dr on [0, r_max]
// by adaptive quadrature
double born_phase_shift(const std::function<double(double)>& potential, int l,
                        double energy, double mass, double r_max);

struct ScatteringLength {
    double a_s;
    std::optional<double> bound_state_energy;  // present iff a_s > a
};

// a_s = a - 1/k~_0 at E -> 0+, with the shallow bound state
// E = -1/(2 m (a_s - a)^2) reported when it exists
ScatteringLength scattering_length(const ShieldedWell& well);

}  // namespace qmkit::spherical
