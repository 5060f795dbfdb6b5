// driven.hpp -- two-level Bloch/Rabi dynamics, Landau-Zener sweeps and
// first-order transition probabilities (FGR).

#pragma once

#include "qmkit/core/types.hpp"

namespace qmkit::dynamics {

struct WindowTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// H = (eps/2) sigma_z + c sigma_x, precession frequency
// Omega = sqrt((2c)^2 + eps^2), tilt angle theta0 = arctan(2c/eps).
struct TwoLevel {
    double eps = 0.0;  // bias energy
    double c = 0.0;    // real coupling energy

    double omega() const { return std::sqrt(4.0 * c * c + eps * eps); }
    double theta0() const { return std::atan2(2.0 * c, eps); }
};

// P(t) = 1 - sin^2(theta0) sin^2(Omega t / 2), probability to stay in the
// initial (up) state.
double rabi_probability(const TwoLevel& tl, double t);

// Euclidean precession of the polarization vector about Omega by |Omega| t.
Vec3 bloch_precession(const Vec3& omega, const Vec3& m0, double t);

// H = (alpha t / 2) sigma_3 + (kappa / 2) sigma_1 swept over t in [-T, T].
struct LZSweep {
    double alpha = 1.0;       // sweep rate (energy^2)
    double kappa = 0.0;       // coupling (energy)
    double half_window = 0.0; // T

    LZSweep(double a, double k, double T) : alpha(a), kappa(k), half_window(T) {
        if (!(alpha > 0.0)) throw std::invalid_argument("LZSweep: alpha must be > 0");
        if (kappa < 0.0) throw std::invalid_argument("LZSweep: kappa must be >= 0");
    }
};

// p = exp(-(pi/2) kappa^2 / alpha), probability to remain in the same
// diabatic (up) state.
double lz_formula(const LZSweep& sweep);

// Fixed-step 4th-order integration of the sweep from -T to +T starting in
// the up state; returns |<up|psi(T)>|^2.  Requires alpha*T >= 20*max(kappa,
// sqrt(alpha)); the step count is raised internally to keep the step below
// 0.01*min(1/kappa, 1/sqrt(alpha)).
double lz_numeric(const LZSweep& sweep, int steps);

// P_t = |W|^2 t^2 sinc^2((omega - drive) t / 2); exact first-order
// expression, not clamped (validity is the caller's responsibility).
double fgr_probability(double coupling, double omega, double drive, double t);

// Gamma = 2 pi sigma^2 / Delta
double fgr_rate(double level_spacing, double sigma);

}  // namespace qmkit::dynamics
