// decay.hpp -- the discrete-level-in-a-band decay model and the Gamow
// resonance of a delta-sealed well.

#pragma once

#include "qmkit/core/types.hpp"

#include <vector>

namespace qmkit::dynamics {

// One discrete level E0 coupled with uniform strength sigma to a band of
// equally spaced levels (spacing Delta), the band symmetric about E0.
struct DecayModel {
    double e0 = 0.0;
    double spacing = 1.0;  // Delta > 0
    double sigma = 0.0;    // uniform coupling
    int nband = 2;

    DecayModel(double e0_, double spacing_, double sigma_, int nband_)
        : e0(e0_), spacing(spacing_), sigma(sigma_), nband(nband_) {
        if (!(spacing > 0.0)) throw std::invalid_argument("DecayModel: Delta must be > 0");
        if (nband < 2) throw std::invalid_argument("DecayModel: need at least 2 band levels");
    }

    double fgr_gamma() const { return 2.0 * M_PI * sigma * sigma / spacing; }
    // band level k = 0..nband-1
    double band_level(int k) const { return e0 + (k - 0.5 * (nband - 1)) * spacing; }
};

struct DecaySpectrumLine {
    double energy;
    double overlap;  // |Psi0(E_n)|^2, renormalized to sum to 1 on the band
};

// Eigenvalues of the coupled model from the secular equation
// sum_k sigma^2/(E - E_k) = E - E0, one root strictly between consecutive
// band levels plus one beyond each band edge; overlaps from the Lorentzian
// sigma^2/((E-E0)^2 + (Gamma/2)^2) with Gamma/2 = sqrt(sigma^2 +
// (pi sigma^2/Delta)^2), renormalized on the finite band.
std::vector<DecaySpectrumLine> decay_spectrum(const DecayModel& model);

// P(t) = |sum_n overlap_n exp(-i E_n t)|^2 from a precomputed spectrum.
double survival_probability(const std::vector<DecaySpectrumLine>& spectrum, double t);
double survival_probability(const DecayModel& model, double t);

// Delta-sealed 1D well: hard wall at x=0, barrier u*delta(x-a).
struct GamowWell {
    double a = 1.0;   // well width
    double u = 1.0;   // barrier strength
    double mass = 1.0;
    int n = 1;        // level index >= 1

    double alpha_b() const { return mass * u; }
};

struct GamowPole {
    // first-order (perturbative) values
    double e_r;
    double gamma_r;      // width Gamma_r = 2 v_r gamma_r
    double k_r;
    double kappa_r;      // imaginary part of k
    double transmission; // barrier transmission g at the level
    // refined complex root of  i k - k cot(k a) = 2 alpha
    Complex k_exact;
    double e_r_exact;
    double gamma_r_exact;
    bool newton_converged;
};

struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GamowPole gamow_pole(const GamowWell& well);

}  // namespace qmkit::dynamics
