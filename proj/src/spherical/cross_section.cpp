#include "qmkit/spherical/cross_section.hpp"

#include "qmkit/spherical/special.hpp"

#include <cmath>

namespace qmkit::spherical {

CrossSections cross_sections(const PhaseShiftSet& ps) {
    CrossSections out;
    out.sigma_total = 0.0;
    const double pref = 4.0 * M_PI / (ps.k * ps.k);
    for (int l = 0; l <= ps.lmax(); ++l) {
        const double s = std::sin(ps.deltas[l]);
        out.sigma_l.push_back((2.0 * l + 1.0) * pref * s * s);
        out.sigma_total += out.sigma_l.back();
    }
    out.tail_estimate = out.sigma_l.empty() ? 0.0 : out.sigma_l.back();
    return out;
}

Complex scattering_amplitude(const PhaseShiftSet& ps, double theta) {
    Complex f = 0.0;
    const double c = std::cos(theta);
    for (int l = 0; l <= ps.lmax(); ++l) {
        const double y_l0 = std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI)) * legendre_p(l, c);
        f += std::sqrt((2.0 * l + 1.0) * M_PI) * ps.t_element(l) * y_l0;
    }
    return -f / ps.k;
}

double optical_theorem_residual(const PhaseShiftSet& ps) {
    const double sigma = cross_sections(ps).sigma_total;
    const double forward = std::imag(scattering_amplitude(ps, 0.0));
    return std::abs(sigma - 4.0 * M_PI / ps.k * forward);
}

double resonance_sigma(double delta_bg, double e_r, double gamma_r, double energy,
                       int l, double k) {
    if (!(gamma_r > 0.0)) throw std::invalid_argument("resonance_sigma: width must be > 0");
    const double delta = delta_bg - std::atan2(0.5 * gamma_r, energy - e_r);
    const double s = std::sin(delta);
    return (2.0 * l + 1.0) * 4.0 * M_PI / (k * k) * s * s;
}

int default_lmax(double ka) { return static_cast<int>(std::ceil(ka)) + 8; }

}  // namespace qmkit::spherical
