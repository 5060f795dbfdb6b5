#include "qmkit/quasi1d/ring.hpp"

#include "qmkit/core/roots.hpp"

#include <algorithm>
#include <cmath>

namespace qmkit::quasi1d {

double ab_ring_level(double length, double flux, int n, double mass) {
    const double kappa = (2.0 * M_PI * n - flux) / length;
    return kappa * kappa / (2.0 * mass);
}

std::vector<double> ab_ring_spectrum(double length, double flux,
                                     const std::vector<int>& n_values, double mass) {
    std::vector<double> out;
    out.reserve(n_values.size());
    for (int n : n_values) out.push_back(ab_ring_level(length, flux, n, mass));
    return out;
}

double persistent_current(double length, double flux, int n, double mass) {
    // I_n = -dE_n/dPhi
    return (2.0 * M_PI * n - flux) / (mass * length * length);
}

std::vector<double> ring_with_scatterer_spectrum(double length, double u, double flux,
                                                 double e_min, double e_max, double mass,
                                                 int grid) {
    if (!(length > 0.0))
        throw std::invalid_argument("ring_with_scatterer_spectrum: length must be > 0");
    if (u < 0.0)
        throw std::invalid_argument("ring_with_scatterer_spectrum: u must be >= 0");
    e_min = std::max(e_min, 0.0);
    if (!(e_max > e_min))
        throw std::invalid_argument("ring_with_scatterer_spectrum: empty energy window");

    // secular function in k: cos(gamma(k)) - sqrt(g(k)) cos(phi)
    const auto gamma = [&](double k) { return k * length - std::atan(mass * u / k); };
    const auto secular = [&](double k) {
        const double r = mass * u / k;
        const double root_g = 1.0 / std::sqrt(1.0 + r * r);
        return std::cos(gamma(k)) - root_g * std::cos(flux);
    };

    const double k_hi = std::sqrt(2.0 * mass * e_max);
    const double k_lo = std::max(std::sqrt(2.0 * mass * e_min), 1e-9 * k_hi);

    std::vector<double> ks = find_roots(secular, k_lo, k_hi, grid);

    // tangent (doubly degenerate) roots do not change sign; locate them as
    // zeros of the k-derivative where the secular function itself vanishes
    const double dk = (k_hi - k_lo) / (grid - 1);
    const auto dsec = [&](double k) {
        return (secular(k + 0.5 * dk) - secular(k - 0.5 * dk)) / dk;
    };
    for (double k : find_roots(dsec, k_lo + dk, k_hi - dk, grid)) {
        if (std::abs(secular(k)) < 1e-9) {
            // keep the pair unless the sign-change scan already found it
            bool seen = false;
            for (double k0 : ks) seen = seen || std::abs(k0 - k) < 10.0 * dk;
            if (!seen) {
                ks.push_back(k);
                ks.push_back(k);
            }
        }
    }

    std::vector<double> energies;
    // the k = 0 constant mode survives only on the transparent unfluxed ring
    if (u == 0.0 && std::abs(1.0 - std::cos(flux)) < 1e-12 && e_min <= 0.0)
        energies.push_back(0.0);
    for (double k : ks) energies.push_back(k * k / (2.0 * mass));
    std::sort(energies.begin(), energies.end());
    while (!energies.empty() && energies.back() > e_max) energies.pop_back();
    return energies;
}

}  // namespace qmkit::quasi1d
