#include "qmkit/core/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace qmkit {

namespace {

double bisect(const std::function<double(double)>& f, double a, double b,
              double fa, double fb, double width_tol) {
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (std::abs(fm) < 1e-12 || (b - a) < width_tol) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    (void)fb;
    return 0.5 * (a + b);
}

}  // namespace

std::vector<double> find_roots(const std::function<double(double)>& f,
                               double lo, double hi, int grid) {
    if (grid < 2) throw std::invalid_argument("find_roots: grid must be >= 2");
    if (!(hi > lo)) throw std::invalid_argument("find_roots: need hi > lo");

    const double width_tol = 1e-13 * (hi - lo);
    std::vector<double> roots;
    double x_prev = lo;
    double f_prev = f(lo);
    if (f_prev == 0.0) roots.push_back(lo);
    for (int i = 1; i < grid; ++i) {
        const double x = lo + (hi - lo) * i / (grid - 1);
        const double fx = f(x);
        if (fx == 0.0) {
            roots.push_back(x);
        } else if (f_prev != 0.0 && (f_prev < 0.0) != (fx < 0.0)) {
            roots.push_back(bisect(f, x_prev, x, f_prev, fx, width_tol));
        }
        x_prev = x;
        f_prev = fx;
    }

    // dedupe near-coincident hits from adjacent cells
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 10.0 * width_tol) out.push_back(r);
    return out;
}

}  // namespace qmkit
