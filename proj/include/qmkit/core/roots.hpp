// roots.hpp -- bracketed 1D root finding on a scan grid, used by the secular
// equations throughout the library.

#pragma once

#include <functional>
#include <vector>

namespace qmkit {

// Scan [lo, hi] on `grid` equispaced points, bracket every sign change and
// refine each bracket by bisection until |f| < 1e-12 or the interval shrinks
// below 1e-13*(hi-lo).  Returns ascending, deduplicated roots; grid points
// that are themselves (numerical) zeros are kept.  Callers with sharp
// resonances must densify the grid (default used by the library is 2001).
std::vector<double> find_roots(const std::function<double(double)>& f,
                               double lo, double hi, int grid = 2001);

}  // namespace qmkit
