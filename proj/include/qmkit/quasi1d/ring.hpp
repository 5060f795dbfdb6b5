// ring.hpp -- Aharonov-Bohm ring spectra and persistent currents, with and
// without a delta scatterer.  Flux enters in fluxon-scaled units (one fluxon
// = 2*pi).

#pragma once

#include "qmkit/core/types.hpp"

#include <vector>

namespace qmkit::quasi1d {

// E_n = (1/2m) (2 pi / L)^2 (n - Phi/2pi)^2
std::vector<double> ab_ring_spectrum(double length, double flux,
                                     const std::vector<int>& n_values, double mass = 1.0);
double ab_ring_level(double length, double flux, int n, double mass = 1.0);

// I_n = -dE_n/dPhi, analytic derivative of the clean-ring level
double persistent_current(double length, double flux, int n, double mass = 1.0);

// Roots of cos(gamma(E)) = sqrt(g(E)) cos(phi) with
// gamma(E) = k L - arctan(m u / k) and g(E) = 1/(1 + (m u / k)^2), scanned
// on [e_min, e_max].  Degenerate pairs (u -> infinity) appear as close
// doublets resolved by the scanner.
std::vector<double> ring_with_scatterer_spectrum(double length, double u, double flux,
                                                 double e_min, double e_max,
                                                 double mass = 1.0, int grid = 20001);

}  // namespace qmkit::quasi1d
