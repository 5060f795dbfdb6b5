// special.hpp -- spherical Bessel machinery and Legendre polynomials.
//
// Hankel sign convention (Messiah): h+- = n(kr) +- i j(kr).  This differs
// from textbooks that define h(1,2) = j +- i n; here h+ ~ (-i)^l e^{ikr}/kr.

#pragma once

#include "qmkit/core/types.hpp"

namespace qmkit::spherical {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SphericalBessel {
    double j;        // regular
    double n;        // singular
    double jp;       // d j_l(x) / dx
    double np;       // d n_l(x) / dx
    Complex h_plus() const { return Complex(n, j); }
    Complex h_minus() const { return Complex(n, -j); }
    Complex hp_plus() const { return Complex(np, jp); }
    Complex hp_minus() const { return Complex(np, -jp); }
};

// j by downward (Miller) recurrence, n by upward recurrence; stable for
// l up to a few hundred.  x > 0 required for the singular family.
SphericalBessel spherical_bessel(int l, double x);

// modified spherical Bessel i_l(x) = sqrt(pi/2x) I_{l+1/2}(x) and its
// derivative, for interior solutions below a potential floor
struct ModifiedSphericalBessel {
    double i;
    double ip;
};
ModifiedSphericalBessel modified_spherical_bessel(int l, double x);

// Legendre polynomial P_l(x) by the three-term recurrence
double legendre_p(int l, double x);

}  // namespace qmkit::spherical
