#include "qmkit/dynamics/decay.hpp"

#include <cmath>

namespace qmkit::dynamics {

namespace {

// secular function f(E) = sum_k sigma^2/(E - E_k) - (E - E0); strictly
// decreasing between its poles
double secular(const DecayModel& m, double e) {
    double s = 0.0;
    for (int k = 0; k < m.nband; ++k) s += 1.0 / (e - m.band_level(k));
    return m.sigma * m.sigma * s - (e - m.e0);
}

// f goes from +inf at lo+ to -inf at hi-: plain bisection
double bisect_between_poles(const DecayModel& m, double lo, double hi) {
    double a = lo, b = hi;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;
        if (secular(m, mid) > 0.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<DecaySpectrumLine> decay_spectrum(const DecayModel& model) {
    std::vector<double> eigenvalues;
    eigenvalues.reserve(model.nband + 1);

    const double e_lo = model.band_level(0);
    const double e_hi = model.band_level(model.nband - 1);
    const double margin =
        std::abs(model.e0 - e_lo) + model.spacing +
        std::sqrt(model.sigma * model.sigma * model.nband + 1.0);

    // one root below the band, one in each gap, one above
    eigenvalues.push_back(bisect_between_poles(model, e_lo - margin, e_lo));
    for (int k = 0; k + 1 < model.nband; ++k)
        eigenvalues.push_back(
            bisect_between_poles(model, model.band_level(k), model.band_level(k + 1)));
    eigenvalues.push_back(bisect_between_poles(model, e_hi, e_hi + margin));

    const double half_gamma = std::hypot(
        model.sigma, M_PI * model.sigma * model.sigma / model.spacing);

    std::vector<DecaySpectrumLine> out;
    out.reserve(eigenvalues.size());
    double total = 0.0;
    for (double e : eigenvalues) {
        const double de = e - model.e0;
        double w;
        if (model.sigma == 0.0) {
            w = (std::abs(de) < 0.5 * model.spacing) ? 1.0 : 0.0;
        } else {
            w = model.sigma * model.sigma / (de * de + half_gamma * half_gamma);
        }
        out.push_back({e, w});
        total += w;
    }
    for (auto& line : out) line.overlap /= total;
    return out;
}

double survival_probability(const std::vector<DecaySpectrumLine>& spectrum, double t) {
    Complex amp = 0.0;
    for (const auto& line : spectrum) amp += line.overlap * std::exp(-I * line.energy * t);
    return std::norm(amp);
}

double survival_probability(const DecayModel& model, double t) {
    return survival_probability(decay_spectrum(model), t);
}

GamowPole gamow_pole(const GamowWell& well) {
    if (well.n < 1) throw std::invalid_argument("gamow_pole: level index must be >= 1");
    if (!(well.alpha_b() > 0.0))
        throw std::invalid_argument("gamow_pole: barrier strength must be positive");

    const double a = well.a, m = well.mass, alpha = well.alpha_b();
    const double k_n = M_PI * well.n / a;
    const double ratio = k_n / (2.0 * alpha);

    GamowPole p{};
    p.k_r = k_n - ratio / a;
    p.kappa_r = ratio * ratio / a;
    p.e_r = (p.k_r * p.k_r - p.kappa_r * p.kappa_r) / (2.0 * m);
    p.gamma_r = 2.0 * (p.k_r / m) * p.kappa_r;
    p.transmission = 1.0 / (1.0 + (alpha / k_n) * (alpha / k_n));

    // refine the outgoing-wave pole of  f(k) = i k - k cot(k a) - 2 alpha
    Complex k(p.k_r, -p.kappa_r);
    bool converged = false;
    for (int it = 0; it < 80; ++it) {
        const Complex cot = std::cos(k * a) / std::sin(k * a);
        const Complex f = I * k - k * cot - 2.0 * alpha;
        const Complex df = I - cot + k * a * (1.0 + cot * cot);
        const Complex step = f / df;
        k -= step;
        if (std::abs(step) < 1e-14 * std::abs(k)) {
            converged = true;
            break;
        }
    }
    const Complex e = k * k / (2.0 * m);
    p.k_exact = k;
    p.e_r_exact = e.real();
    p.gamma_r_exact = -2.0 * e.imag();
    p.newton_converged = converged && std::isfinite(p.e_r_exact) &&
                         p.gamma_r_exact > 0.0 &&
                         std::abs(k.real() - k_n) < 0.5 * M_PI / a;
    if (!p.newton_converged) {
        // report the first-order values, flagged
        p.k_exact = Complex(p.k_r, -p.kappa_r);
        p.e_r_exact = p.e_r;
        p.gamma_r_exact = p.gamma_r;
    }
    return p;
}

}  // namespace qmkit::dynamics
