// quadrature.hpp -- adaptive Simpson integration for the Born-type radial
// integrals.

#pragma once

#include <functional>
#include <stdexcept>

namespace qmkit {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// adaptive Simpson with Richardson correction; tol is absolute
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-12);

}  // namespace qmkit
