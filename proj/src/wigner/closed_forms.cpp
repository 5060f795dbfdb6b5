#include "qmkit/wigner/closed_forms.hpp"

#include <cmath>

namespace qmkit::wigner {

namespace {

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

}  // namespace

double gaussian_wigner(double x, double p, double x_center, double p_center, double sigma) {
    const double sx = sigma, sp = 0.5 / sigma;
    const double dx = x - x_center, dp = p - p_center;
    return 1.0 / (sx * sp) *
           std::exp(-dx * dx / (2.0 * sx * sx) - dp * dp / (2.0 * sp * sp));
}

BoxWignerComponents box_wigner(int n, double length, double x, double p) {
    if (n < 1) throw std::invalid_argument("box_wigner: level index starts at 1");
    if (!(x > 0.0) || !(x < 0.5 * length))
        throw std::domain_error("box_wigner: closed forms hold on 0 < X < L/2");
    const double k = M_PI * n / length;
    const double envelope = 4.0 * x / length;
    BoxWignerComponents out;
    out.classical_plus = 0.5 * envelope * sinc(2.0 * x * (p - k));
    out.classical_minus = 0.5 * envelope * sinc(2.0 * x * (p + k));
    out.interference = -std::cos(2.0 * k * x) * envelope * sinc(2.0 * x * p);
    return out;
}

double box_position_density(int n, double length, double x) {
    const double k = M_PI * n / length;
    const double s = std::sin(k * x);
    return 2.0 * s * s / length;
}

double TwoSlitWigner::momentum_marginal(double p) const {
    const double sp = 0.5 / sigma;
    const double gauss = std::exp(-p * p / (2.0 * sp * sp)) / (std::sqrt(2.0 * M_PI) * sp);
    const double c = std::cos(0.5 * p * slit_distance);
    return 2.0 * c * c * gauss;
}

TwoSlitWigner two_slit_wigner(double d, double sigma, double x0, double dx, int n_points) {
    TwoSlitWigner out;
    out.slit_distance = d;
    out.sigma = sigma;
    out.overlap_negligible = std::exp(-d * d / (8.0 * sigma * sigma)) < 1e-7;

    const double center = x0 + 0.5 * (n_points - 1) * dx;
    PhaseSpaceFunction& w = out.w;
    w.x0 = x0;
    w.dx = 0.5 * dx;
    w.dp = 2.0 * M_PI / (2.0 * n_points * dx);
    w.p0 = -0.5 * n_points * w.dp;
    w.values.resize(2 * n_points - 1, n_points);
    for (int s = 0; s < 2 * n_points - 1; ++s) {
        const double x = w.x(s) - center;
        for (int pi = 0; pi < n_points; ++pi) {
            const double p = w.p(pi);
            w.values(s, pi) = 0.5 * gaussian_wigner(x, p, -0.5 * d, 0.0, sigma) +
                              0.5 * gaussian_wigner(x, p, +0.5 * d, 0.0, sigma) +
                              std::cos(p * d) * gaussian_wigner(x, p, 0.0, 0.0, sigma);
        }
    }
    return out;
}

double ThermalOscillatorWigner::effective_beta() const {
    const double half = 0.5 * beta * omega;
    return beta * std::tanh(half) / half;
}

double ThermalOscillatorWigner::operator()(double x, double p) const {
    const double h = p * p / (2.0 * mass) + 0.5 * mass * omega * omega * x * x;
    return 2.0 * std::tanh(0.5 * beta * omega) * std::exp(-effective_beta() * h);
}

double ThermalOscillatorWigner::purity() const { return std::tanh(0.5 * beta * omega); }

ThermalOscillatorWigner thermal_oscillator_wigner(double mass, double omega, double beta) {
    if (!(beta > 0.0) || !(omega > 0.0))
        throw std::invalid_argument("thermal_oscillator_wigner: beta, omega must be > 0");
    return {mass, omega, beta};
}

double thermal_oscillator_purity_sum(double omega, double beta, int nmax) {
    // trace(rho^2) = Z(2 beta) / Z(beta)^2 over Boltzmann weights
    double z1 = 0.0, z2 = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        const double e = (n + 0.5) * omega;
        z1 += std::exp(-beta * e);
        z2 += std::exp(-2.0 * beta * e);
    }
    return z2 / (z1 * z1);
}

double weyl_count(const std::function<double(double, double)>& hamiltonian, double energy,
                  double x_lo, double x_hi, double p_lo, double p_hi, int nx, int np) {
    const double dx = (x_hi - x_lo) / nx, dp = (p_hi - p_lo) / np;
    double cells = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = x_lo + (i + 0.5) * dx;
        for (int j = 0; j < np; ++j) {
            const double p = p_lo + (j + 0.5) * dp;
            if (hamiltonian(x, p) <= energy) {
                if (i == 0 || i == nx - 1 || j == 0 || j == np - 1)
                    throw WindowTooSmallError(
                        "weyl_count: counted region touches the window boundary");
                cells += 1.0;
            }
        }
    }
    return cells * dx * dp / (2.0 * M_PI);
}

double semiclassical_partition(const std::function<double(double, double)>& hamiltonian,
                               double beta, double x_lo, double x_hi, double p_lo,
                               double p_hi, int nx, int np) {
    const double dx = (x_hi - x_lo) / nx, dp = (p_hi - p_lo) / np;
    double sum = 0.0, boundary_max = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = x_lo + (i + 0.5) * dx;
        for (int j = 0; j < np; ++j) {
            const double p = p_lo + (j + 0.5) * dp;
            const double w = std::exp(-beta * hamiltonian(x, p));
            sum += w;
            if (i == 0 || i == nx - 1 || j == 0 || j == np - 1)
                boundary_max = std::max(boundary_max, w);
        }
    }
    if (boundary_max > 1e-10)
        throw WindowTooSmallError("semiclassical_partition: weight alive at the boundary");
    return sum * dx * dp / (2.0 * M_PI);
}

}  // namespace qmkit::wigner
