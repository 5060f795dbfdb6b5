// cross_section.hpp -- partial-wave cross sections, scattering amplitude,
// optical theorem, and resonance line shapes.

#pragma once

#include "qmkit/core/types.hpp"

#include <vector>

namespace qmkit::spherical {

struct PhaseShiftSet {
    double energy = 0.0;
    double k = 0.0;                // k_E
    std::vector<double> deltas;    // delta_l for l = 0 .. lmax

    int lmax() const { return static_cast<int>(deltas.size()) - 1; }
    Complex s_element(int l) const { return std::exp(2.0 * I * deltas[l]); }
    // T_ll = -e^{i delta} 2 sin(delta)
    Complex t_element(int l) const {
        return -std::exp(I * deltas[l]) * 2.0 * std::sin(deltas[l]);
    }
};

struct CrossSections {
    std::vector<double> sigma_l;  // (2l+1) (4pi/k^2) sin^2(delta_l)
    double sigma_total;
    // truncation estimate from the last partial wave
    double tail_estimate;
};

CrossSections cross_sections(const PhaseShiftSet& ps);

// f(theta) = -(1/k) sum sqrt((2l+1) pi) T_ll Y_l0(theta)
Complex scattering_amplitude(const PhaseShiftSet& ps, double theta);

// | sigma_total - (4 pi / k) Im f(0) |
double optical_theorem_residual(const PhaseShiftSet& ps);

// sigma_l with delta_l = delta_bg - arctan((Gamma/2)/(E - E_r)); the
// Breit-Wigner peak is the delta_bg = 0 case, the q = 0 anti-resonance dip
// is delta_bg = pi/2.
double resonance_sigma(double delta_bg, double e_r, double gamma_r, double energy,
                       int l, double k);

// default partial-wave cutoff ceil(ka) + 8
int default_lmax(double ka);

}  // namespace qmkit::spherical
