#include "qmkit/quasi1d/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qmkit::quasi1d {

int Network::vertex_count() const {
    int n = 0;
    for (const Bond& b : bonds) n = std::max({n, b.from + 1, b.to + 1});
    return n;
}

VertexSMatrix delta_vertex(double u, double mass) {
    return [u, mass](double energy, int legs) {
        const double v_e = std::sqrt(2.0 * energy / mass);
        // physical-amplitude convention: transparent for u = 0
        const Complex coupling = (2.0 / legs) / (1.0 + I * (u / v_e));
        return (coupling * ComplexMatrix::Ones(legs, legs) -
                ComplexMatrix::Identity(legs, legs))
            .eval();
    };
}

ComplexMatrix Network::bond_matrix(double energy) const {
    const int nd = directed_count();
    const int nv = vertex_count();

    // legs per vertex, in directed-bond order
    std::vector<std::vector<int>> legs(nv);
    for (int d = 0; d < nd; ++d) legs[directed_origin(d)].push_back(d);

    ComplexMatrix s = ComplexMatrix::Zero(nd, nd);
    for (int v = 0; v < nv; ++v) {
        const int m = static_cast<int>(legs[v].size());
        if (m == 0) continue;
        ComplexMatrix block;
        if (v < static_cast<int>(vertex_scatterers.size()) && vertex_scatterers[v]) {
            block = vertex_scatterers[v](energy, m);
        } else {
            block = delta_vertex(0.0, mass)(energy, m);
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) s(legs[v][i], legs[v][j]) = block(i, j);
    }

    const double k = std::sqrt(2.0 * mass * energy);
    ComplexMatrix u = ComplexMatrix::Zero(nd, nd);
    for (int d = 0; d < nd; ++d) {
        const Complex phase = std::exp(I * (k * directed_length(d) + directed_phase(d)));
        // row pair(d) of J picks directed bond d after propagation
        u.row(pair(d)) = phase * s.row(d);
    }
    return u;
}

namespace {

// eigenphases of a unitary matrix, principal values in (-pi, pi]
std::vector<double> eigenphases(const ComplexMatrix& u) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, false);
    std::vector<double> phases;
    phases.reserve(u.rows());
    for (Eigen::Index i = 0; i < u.rows(); ++i)
        phases.push_back(std::arg(solver.eigenvalues()(i)));
    return phases;
}

// signed eigenphase of smallest magnitude: crosses zero upward at every
// level of the graph, whatever its multiplicity
double nearest_phase(const Network& net, double energy) {
    double best = M_PI;
    for (double th : eigenphases(net.bond_matrix(energy)))
        if (std::abs(th) < std::abs(best)) best = th;
    return best;
}

}  // namespace

std::vector<NetworkLevel> network_spectrum(const Network& net, double e_min, double e_max,
                                           int grid) {
    if (!(e_max > e_min) || e_min < 0.0)
        throw std::invalid_argument("network_spectrum: need 0 <= e_min < e_max");
    if (grid < 2) throw std::invalid_argument("network_spectrum: grid too small");

    const double lo = std::max(e_min, 1e-12 * (e_max - e_min));
    const double de = (e_max - lo) / (grid - 1);

    std::vector<NetworkLevel> levels;
    double prev_e = lo;
    double prev_h = nearest_phase(net, lo);
    for (int i = 1; i < grid; ++i) {
        const double e = lo + i * de;
        const double h = nearest_phase(net, e);
        if (prev_h < 0.0 && h >= 0.0) {
            // candidate crossing; reject identity-switch jumps by demanding
            // the bisected phase actually vanish
            double a = prev_e, b = e, ha = prev_h;
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a + b);
                const double hm = nearest_phase(net, m);
                if ((hm < 0.0) == (ha < 0.0)) {
                    a = m;
                    ha = hm;
                } else {
                    b = m;
                }
            }
            const double e_root = 0.5 * (a + b);
            const double h_root = nearest_phase(net, e_root);
            const double delta = std::max(de * 1e-4, 1e-12 * e_root);
            const double motion = std::abs(nearest_phase(net, e_root + delta)) +
                                  std::abs(nearest_phase(net, e_root - delta));
            if (std::abs(h_root) < std::max(1e-7, 3.0 * motion)) {
                int mult = 0;
                for (double th : eigenphases(net.bond_matrix(e_root)))
                    if (std::abs(th) <= std::max(std::abs(h_root) * 1.5, 0.75 * motion))
                        ++mult;
                levels.push_back({e_root, std::max(mult, 1)});
            }
        }
        prev_e = e;
        prev_h = h;
    }
    return levels;
}

}  // namespace qmkit::quasi1d
