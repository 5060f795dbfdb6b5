#include "qmkit/core/quadrature.hpp"

#include <cmath>

namespace qmkit {

namespace {

double simpson_step(const std::function<double(double)>& f, double lo, double hi,
                    double f_lo, double f_mid, double f_hi, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid), mh = 0.5 * (mid + hi);
    const double f_lm = f(lm), f_mh = f(mh);
    const double whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
    const double left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lm + f_mid);
    const double right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_mh + f_hi);
    if (std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    if (depth > 44) throw QuadratureError("integrate: refinement limit reached");
    return simpson_step(f, lo, mid, f_lo, f_lm, f_mid, 0.5 * tol, depth + 1) +
           simpson_step(f, mid, hi, f_mid, f_mh, f_hi, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
    if (!(hi > lo)) return 0.0;
    const double mid = 0.5 * (lo + hi);
    return simpson_step(f, lo, hi, f(lo), f(mid), f(hi), tol, 0);
}

}  // namespace qmkit
