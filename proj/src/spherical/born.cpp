#include "qmkit/spherical/born.hpp"

#include "qmkit/core/quadrature.hpp"

#include <cmath>

namespace qmkit::spherical {

double radial_fourier(const std::function<double(double)>& potential, double q,
                      double r_max) {
    const auto integrand = [&](double r) {
        const double x = q * r;
        const double sinc = (std::abs(x) < 1e-8) ? 1.0 - x * x / 6.0 : std::sin(x) / x;
        return potential(r) * sinc * r * r;
    };
    return 4.0 * M_PI * integrate(integrand, 0.0, r_max, 1e-12);
}

double born_dcs(const std::function<double(double)>& potential, double energy,
                double theta, double mass, double r_max) {
    const double k = std::sqrt(2.0 * mass * energy);
    const double q = 2.0 * k * std::sin(0.5 * theta);
    const double amp = mass / (2.0 * M_PI) * radial_fourier(potential, q, r_max);
    return amp * amp;
}

double born_total(const std::function<double(double)>& potential, double energy,
                  double mass, double r_max) {
    const double k = std::sqrt(2.0 * mass * energy);
    const double v = k / mass;
    const auto integrand = [&](double q) {
        const double u_tilde = radial_fourier(potential, q, r_max);
        return u_tilde * u_tilde * q;
    };
    return integrate(integrand, 0.0, 2.0 * k, 1e-10) / (2.0 * M_PI * v * v);
}

Complex free_green(int dimension, double energy, double r, double mass) {
    if (!(energy > 0.0)) throw DomainError("free_green: energy must be > 0");
    if (!(r > 0.0)) throw DomainError("free_green: r must be > 0");
    const double k = std::sqrt(2.0 * mass * energy);
    switch (dimension) {
        case 1:
            return -I * (mass / k) * std::exp(I * k * r);
        case 2: {
            const Complex h0(std::cyl_bessel_j(0, k * r), std::cyl_neumann(0, k * r));
            return -I * (mass / 2.0) * h0;
        }
        case 3:
            return -(mass / (2.0 * M_PI * r)) * std::exp(I * k * r);
        default:
            throw std::invalid_argument("free_green: dimension must be 1, 2 or 3");
    }
}

Complex regularized_delta_ueff(double u, double cutoff, double energy, double mass) {
    if (!(energy > 0.0)) throw DomainError("regularized_delta_ueff: energy must be > 0");
    const double k = std::sqrt(2.0 * mass * energy);
    if (!(cutoff > k))
        throw DomainError("regularized_delta_ueff: cutoff must exceed k_E");
    const Complex lambda_e = cutoff - 0.5 * k * std::log((cutoff + k) / (cutoff - k)) +
                             I * 0.5 * M_PI * k;
    const Complex g = -(mass / (M_PI * M_PI)) * lambda_e;
    return u / (1.0 - u * g);
}

double hydrogen_level(double alpha_coulomb, double mass, int l, int nu) {
    if (nu < 1) throw std::invalid_argument("hydrogen_level: nu must be >= 1");
    if (l < 0) throw std::invalid_argument("hydrogen_level: l must be >= 0");
    const double n = l + nu;
    return -alpha_coulomb * alpha_coulomb * mass / (2.0 * n * n);
}

}  // namespace qmkit::spherical
