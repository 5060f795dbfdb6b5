#include "qmkit/quasi1d/observables.hpp"

#include <cmath>

namespace qmkit::quasi1d {

double friedel_dos(const std::function<ComplexMatrix(double)>& s_of_e, double energy,
                   double de) {
    const ComplexMatrix s = s_of_e(energy);
    const ComplexMatrix ds = (s_of_e(energy + de) - s_of_e(energy - de)) / (2.0 * de);
    const Complex trace = (ds * s.adjoint()).trace();
    return (trace / (2.0 * M_PI * I)).real();
}

Complex green_1d(double energy, double x, double x0, double u, double mass) {
    if (!(energy > 0.0)) throw std::invalid_argument("green_1d: energy must be > 0");
    const double k = std::sqrt(2.0 * mass * energy);
    const double v = k / mass;
    const Complex direct = std::exp(I * k * std::abs(x - x0));
    if (u == 0.0) return -I / v * direct;
    const Complex r = delta_amplitudes(u, v).r;
    const Complex bounced = std::exp(I * k * (std::abs(x) + std::abs(x0)));
    return -I / v * (direct + r * bounced);
}

double wall_shift_matrix(int n, int m, double length, double mass) {
    if (n < 1 || m < 1) throw std::invalid_argument("wall_shift_matrix: indices start at 1");
    return -(M_PI * M_PI) / (mass * length * length * length) * n * m;
}

double junction_coupling(double dpsi_n, double dpsi_m, double u, double mass) {
    if (!(u > 0.0)) throw std::invalid_argument("junction_coupling: u must be > 0");
    return -dpsi_n * dpsi_m / (4.0 * mass * mass * u);
}

double double_well_splitting(double a, double g, double energy, double mass) {
    if (!(g > 0.0) || g > 1.0)
        throw InvalidGError("double_well_splitting: transmission must be in (0, 1]");
    return velocity(energy, mass) / a * std::sqrt(g);
}

}  // namespace qmkit::quasi1d
