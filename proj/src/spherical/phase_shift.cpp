#include "qmkit/spherical/phase_shift.hpp"

#include "qmkit/core/quadrature.hpp"
#include "qmkit/spherical/special.hpp"

#include <cmath>

namespace qmkit::spherical {

double interior_log_derivative_u(const ShieldedWell& well, double energy) {
    const double m = well.mass, a = well.a;
    const double de = energy - well.floor;
    const double boost = 2.0 * m * well.shield;
    if (std::abs(de) < 1e-14 * std::max(1.0, std::abs(well.floor)))
        return 1.0 / a + boost;  // u ~ r at the crossover
    const double alpha = std::sqrt(2.0 * m * std::abs(de));
    if (de > 0.0) return alpha / std::tan(alpha * a) + boost;
    return alpha / std::tanh(alpha * a) + boost;
}

double interior_log_derivative(const ShieldedWell& well, double energy, int l) {
    const double m = well.mass, a = well.a;
    const double de = energy - well.floor;
    const double boost = 2.0 * m * well.shield;
    if (std::abs(de) < 1e-14 * std::max(1.0, std::abs(well.floor)))
        return static_cast<double>(l) / a + boost;  // R ~ r^l
    const double alpha = std::sqrt(2.0 * m * std::abs(de));
    if (de > 0.0) {
        const auto b = spherical_bessel(l, alpha * a);
        return alpha * b.jp / b.j + boost;
    }
    const double x = alpha * a;
    if (x > 300.0) {
        // deep interior: i_l'/i_l -> 1 - 1/x + l(l+1)/(2x^2)
        return alpha * (1.0 - 1.0 / x + 0.5 * l * (l + 1.0) / (x * x)) + boost;
    }
    const auto b = modified_spherical_bessel(l, x);
    return alpha * b.ip / b.i + boost;
}

double phase_shift(double k_l, int l, double energy, double a, double mass) {
    const double k = std::sqrt(2.0 * mass * energy);
    const auto b = spherical_bessel(l, k * a);
    return std::atan2(-(k_l * b.j - k * b.jp), k_l * b.n - k * b.np);
}

double hard_sphere_phase_shift(int l, double ka) {
    const auto b = spherical_bessel(l, ka);
    return std::atan2(-b.j, b.n);
}

double born_phase_shift(const std::function<double(double)>& potential, int l,
                        double energy, double mass, double r_max) {
    const double k = std::sqrt(2.0 * mass * energy);
    const double v_e = k / mass;
    const auto integrand = [&](double r) {
        if (r == 0.0) return 0.0;
        const double krj = k * r * spherical_bessel(l, k * r).j;
        return potential(r) * krj * krj;
    };
    double integral;
    try {
        integral = integrate(integrand, 0.0, r_max, 1e-12);
    } catch (const QuadratureError&) {
        throw IntegralDivergedError("born_phase_shift: radial integral did not converge");
    }
    return -2.0 / v_e * integral;
}

ScatteringLength scattering_length(const ShieldedWell& well) {
    // small-energy extrapolation of a_s(E) = a - 1/k~_0(E)
    const double scale = std::max({1.0, std::abs(well.floor), well.shield / well.a});
    const double e1 = 1e-7 * scale, e2 = 0.5e-7 * scale;
    const double a1 = well.a - 1.0 / interior_log_derivative_u(well, e1);
    const double a2 = well.a - 1.0 / interior_log_derivative_u(well, e2);
    ScatteringLength out;
    out.a_s = a2 + (a2 - a1);  // Richardson step toward E = 0
    if (out.a_s > well.a) {
        const double d = out.a_s - well.a;
        out.bound_state_energy = -1.0 / (2.0 * well.mass * d * d);
    }
    return out;
}

}  // namespace qmkit::spherical
