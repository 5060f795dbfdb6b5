#include "qmkit/spherical/special.hpp"

#include <cmath>
#include <vector>

namespace qmkit::spherical {

namespace {

// j_0 .. j_lmax by Miller's downward recurrence, normalized against j_0
std::vector<double> bessel_j_table(int lmax, double x) {
    std::vector<double> out(lmax + 2, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const double j0 = std::sin(x) / x;
    if (lmax == 0) {
        out[0] = j0;
        out[1] = (std::sin(x) / x - std::cos(x)) / x;
        return out;
    }
    // start far enough above lmax for the minimal solution to dominate
    const int start = lmax + 16 + static_cast<int>(std::sqrt(40.0 * lmax)) +
                      static_cast<int>(x);
    double fp = 0.0;       // f_{l+1}
    double fc = 1e-300;    // f_l
    std::vector<double> raw(lmax + 2, 0.0);
    for (int l = start; l >= 0; --l) {
        const double fm = (2.0 * l + 3.0) / x * fc - fp;
        fp = fc;
        fc = fm;
        if (l <= lmax + 1) raw[l] = fc;
        // rescale to avoid overflow
        if (std::abs(fc) > 1e250) {
            fc *= 1e-250;
            fp *= 1e-250;
            for (double& v : raw) v *= 1e-250;
        }
    }
    const double scale = j0 / raw[0];
    for (int l = 0; l <= lmax + 1; ++l) out[l] = raw[l] * scale;
    return out;
}

}  // namespace

SphericalBessel spherical_bessel(int l, double x) {
    if (l < 0) throw std::invalid_argument("spherical_bessel: l must be >= 0");
    if (!(x > 0.0)) throw DomainError("spherical_bessel: x must be > 0");

    const auto j = bessel_j_table(l, x);

    // upward recurrence for the singular family is stable
    double n_prev = std::cos(x) / x;                      // n_0
    double n_curr = (std::cos(x) / x + std::sin(x)) / x;  // n_1
    double n_l, n_lp1;
    if (l == 0) {
        n_l = n_prev;
        n_lp1 = n_curr;
    } else {
        for (int k = 2; k <= l; ++k) {
            const double n_next = (2.0 * k - 1.0) / x * n_curr - n_prev;
            n_prev = n_curr;
            n_curr = n_next;
        }
        n_l = n_curr;
        n_lp1 = (2.0 * l + 1.0) / x * n_curr - n_prev;
    }

    SphericalBessel out;
    out.j = j[l];
    out.n = n_l;
    // f_l' = f_{l-1} - (l+1)/x f_l; for l = 0, f_0' = -f_1
    if (l == 0) {
        out.jp = -j[1];
        out.np = -n_lp1;
    } else {
        out.jp = j[l - 1] - (l + 1.0) / x * j[l];
        const double n_lm1 = (l == 1) ? std::cos(x) / x : n_prev;
        out.np = n_lm1 - (l + 1.0) / x * n_l;
    }
    return out;
}

ModifiedSphericalBessel modified_spherical_bessel(int l, double x) {
    if (l < 0) throw std::invalid_argument("modified_spherical_bessel: l must be >= 0");
    if (!(x > 0.0)) throw DomainError("modified_spherical_bessel: x must be > 0");

    // i_l satisfies i_{l-1} - i_{l+1} = (2l+1)/x i_l; downward recurrence is
    // stable for the growing-at-small-l family
    const int start = l + 16 + static_cast<int>(std::sqrt(40.0 * l)) +
                      static_cast<int>(std::min(x, 1e4));
    double fp = 0.0;
    double fc = 1e-300;
    std::vector<double> raw(l + 2, 0.0);
    for (int k = start; k >= 0; --k) {
        const double fm = fp + (2.0 * k + 3.0) / x * fc;
        fp = fc;
        fc = fm;
        if (k <= l + 1) raw[k] = fc;
        if (std::abs(fc) > 1e250) {
            fc *= 1e-250;
            fp *= 1e-250;
            for (double& v : raw) v *= 1e-250;
        }
    }
    const double i0 = std::sinh(x) / x;
    const double scale = i0 / raw[0];

    ModifiedSphericalBessel out;
    out.i = raw[l] * scale;
    if (l == 0)
        out.ip = raw[1] * scale;  // i_0' = i_1
    else
        out.ip = raw[l - 1] * scale - (l + 1.0) / x * out.i;
    return out;
}

double legendre_p(int l, double x) {
    if (l < 0) throw std::invalid_argument("legendre_p: l must be >= 0");
    double p_prev = 1.0;
    if (l == 0) return p_prev;
    double p_curr = x;
    for (int k = 2; k <= l; ++k) {
        const double p_next = ((2.0 * k - 1.0) * x * p_curr - (k - 1.0) * p_prev) / k;
        p_prev = p_curr;
        p_curr = p_next;
    }
    return p_curr;
}

}  // namespace qmkit::spherical
