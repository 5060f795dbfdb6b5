#include "qmkit/dynamics/driven.hpp"

#include <cmath>

namespace qmkit::dynamics {

double rabi_probability(const TwoLevel& tl, double t) {
    const double st = std::sin(tl.theta0());
    const double s = std::sin(0.5 * tl.omega() * t);
    return 1.0 - st * st * s * s;
}

Vec3 bloch_precession(const Vec3& omega, const Vec3& m0, double t) {
    const double w = omega.norm();
    if (w == 0.0) return m0;
    const Vec3 n = omega / w;
    const double phi = w * t;
    // Rodrigues rotation of m0 about n
    return m0 * std::cos(phi) + n.cross(m0) * std::sin(phi) +
           n * (n.dot(m0)) * (1.0 - std::cos(phi));
}

double lz_formula(const LZSweep& sweep) {
    return std::exp(-0.5 * M_PI * sweep.kappa * sweep.kappa / sweep.alpha);
}

namespace {

using State = Eigen::Vector2cd;

// exp(-i (ax sigma_x + ay sigma_y + az sigma_z)) psi via the closed 2x2 form;
// exactly unitary.
State pauli_rotate(double ax, double ay, double az, const State& psi) {
    const double phi = std::sqrt(ax * ax + ay * ay + az * az);
    if (phi == 0.0) return psi;
    const double c = std::cos(phi), s = std::sin(phi) / phi;
    State out;
    out(0) = (c - I * s * az) * psi(0) + (-I * s * ax - s * ay) * psi(1);
    out(1) = (-I * s * ax + s * ay) * psi(0) + (c + I * s * az) * psi(1);
    return out;
}

}  // namespace

double lz_numeric(const LZSweep& sweep, int steps) {
    const double t_end = sweep.half_window;
    const double guard = 20.0 * std::max(sweep.kappa, std::sqrt(sweep.alpha));
    if (sweep.alpha * t_end < guard)
        throw WindowTooSmallError("lz_numeric: alpha*T too small for the asymptotic window");

    const double max_step =
        0.01 * std::min(sweep.kappa > 0.0 ? 1.0 / sweep.kappa : 1e300,
                        1.0 / std::sqrt(sweep.alpha));
    int n = std::max(steps, 2);
    const double span = 2.0 * t_end;
    if (span / n > max_step) n = static_cast<int>(std::ceil(span / max_step));

    // Fourth-order Magnus stepper on Gauss nodes.  H(t) = (alpha t/2) s3 +
    // (kappa/2) s1 gives the commutator term [H2,H1] = i alpha kappa
    // (t2 - t1)/2 * s2, folded below into a single Pauli rotation per step;
    // every step is exactly unitary.
    const double h = span / n;
    const double gauss = std::sqrt(3.0) / 6.0;
    State psi;
    psi << 1.0, 0.0;
    double t = -t_end;
    for (int i = 0; i < n; ++i) {
        const double t1 = t + (0.5 - gauss) * h;
        const double t2 = t + (0.5 + gauss) * h;
        const double ax = 0.5 * sweep.kappa * h;
        const double az = 0.25 * sweep.alpha * (t1 + t2) * h;
        const double ay =
            std::sqrt(3.0) / 24.0 * h * h * sweep.alpha * sweep.kappa * (t2 - t1);
        psi = pauli_rotate(ax, ay, az, psi);
        t += h;
    }
    return std::norm(psi(0));
}

double fgr_probability(double coupling, double omega, double drive, double t) {
    const double nu = 0.5 * (omega - drive) * t;
    const double sinc = (std::abs(nu) < 1e-8) ? 1.0 - nu * nu / 6.0 : std::sin(nu) / nu;
    return coupling * coupling * t * t * sinc * sinc;
}

double fgr_rate(double level_spacing, double sigma) {
    if (!(level_spacing > 0.0)) throw std::invalid_argument("fgr_rate: Delta must be > 0");
    return 2.0 * M_PI * sigma * sigma / level_spacing;
}

}  // namespace qmkit::dynamics
