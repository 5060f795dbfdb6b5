// closed_forms.hpp -- exactly known Wigner functions (Gaussian, box
// eigenstate, two-slit, thermal oscillator) and semiclassical phase-space
// counting.

#pragma once

#include "qmkit/wigner/transform.hpp"

#include <functional>

namespace qmkit::wigner {

// minimal wavepacket: sigma_x = sigma, sigma_p = 1/(2 sigma)
double gaussian_wigner(double x, double p, double x_center, double p_center, double sigma);

// the three components of the box-eigenstate Wigner function on the
// half-domain 0 < X < L/2 (k = pi n / L); full W = plus + minus + interference
struct BoxWignerComponents {
    double classical_plus;
    double classical_minus;
    double interference;
    double total() const { return classical_plus + classical_minus + interference; }
};
BoxWignerComponents box_wigner(int n, double length, double x, double p);

// P-marginal of the box eigenstate, 2 sin^2(kX) / L
double box_position_density(int n, double length, double x);

struct TwoSlitWigner {
    PhaseSpaceFunction w;
    bool overlap_negligible;  // d >> sigma guard satisfied
    double slit_distance;
    double sigma;

    // 2 cos^2(Pd/2) rho_0(P), fringe spacing 2 pi / d
    double momentum_marginal(double p) const;
};

// closed-form three-term sum evaluated on the transform grid of an N-point
// state grid starting at x0 (slits at +-d/2 around the window center)
TwoSlitWigner two_slit_wigner(double d, double sigma, double x0, double dx, int n_points);

struct ThermalOscillatorWigner {
    double mass;
    double omega;
    double beta;

    // normalized closed form: 2 tanh(beta w / 2) exp(-beta_eff H(X, P))
    double operator()(double x, double p) const;
    double purity() const;        // tanh(beta omega / 2)
    double effective_beta() const;  // beta * tanh(beta w/2)/(beta w/2)
};
ThermalOscillatorWigner thermal_oscillator_wigner(double mass, double omega, double beta);

// exact purity from the Boltzmann sum over oscillator levels (oracle)
double thermal_oscillator_purity_sum(double omega, double beta, int nmax = 4000);

// N(E) = Int_{H <= E} dX dP / 2pi over a rectangular window; throws if the
// counted region touches the window boundary
double weyl_count(const std::function<double(double, double)>& hamiltonian, double energy,
                  double x_lo, double x_hi, double p_lo, double p_hi, int nx, int np);

// Z(beta) = Int e^{-beta H} dX dP / 2pi on the same kind of window
double semiclassical_partition(const std::function<double(double, double)>& hamiltonian,
                               double beta, double x_lo, double x_hi, double p_lo,
                               double p_hi, int nx, int np);

}  // namespace qmkit::wigner
