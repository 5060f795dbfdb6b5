#include "qmkit/quasi1d/scatter.hpp"

#include <cmath>

namespace qmkit::quasi1d {

DeltaAmplitudes delta_amplitudes(double u, double v_e) {
    if (!(v_e > 0.0)) throw std::invalid_argument("delta_amplitudes: velocity must be > 0");
    const Complex denom = 1.0 + I * (u / v_e);
    DeltaAmplitudes out;
    out.r = -I * (u / v_e) / denom;
    out.t = 1.0 + out.r;
    out.g = 1.0 / (1.0 + (u / v_e) * (u / v_e));
    return out;
}

ScatteringMatrix junction_smatrix(int wires, double u, double v_e, bool row_swapped) {
    if (wires < 1) throw std::invalid_argument("junction_smatrix: need at least one wire");
    if (!(v_e > 0.0)) throw std::invalid_argument("junction_smatrix: velocity must be > 0");
    if (row_swapped && wires != 2)
        throw std::invalid_argument("junction_smatrix: row-swapped form is two-wire only");

    const Complex coupling = (2.0 / wires) / (1.0 + I * (u / v_e));
    ScatteringMatrix out;
    out.s = ComplexMatrix::Identity(wires, wires) -
            coupling * ComplexMatrix::Ones(wires, wires);
    out.energy = 0.5 * v_e * v_e;
    out.velocities.assign(wires, v_e);
    if (row_swapped) {
        out.s.row(0).swap(out.s.row(1));
        out.s = -out.s;
    }
    return out;
}

double fabry_perot(double g, double phi) {
    if (!(g > 0.0) || g > 1.0)
        throw InvalidGError("fabry_perot: transmission must be in (0, 1]");
    const double s = std::sin(phi);
    return 1.0 / (1.0 + 4.0 * (1.0 - g) / (g * g) * s * s);
}

TransferMatrix delta_transfer(const ComplexMatrix& m_matrix, double energy,
                              const std::vector<double>& velocities) {
    const Eigen::Index n = m_matrix.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    TransferMatrix t;
    t.tpp = id - I * m_matrix;
    t.tpm = -I * m_matrix;
    t.tmp = I * m_matrix;
    t.tmm = id + I * m_matrix;
    t.energy = energy;
    t.velocities = velocities;
    return t;
}

TransferMatrix free_transfer(const std::vector<double>& phases, double energy,
                             const std::vector<double>& velocities) {
    const Eigen::Index n = static_cast<Eigen::Index>(phases.size());
    TransferMatrix t;
    t.tpp = ComplexMatrix::Zero(n, n);
    t.tmm = ComplexMatrix::Zero(n, n);
    t.tpm = ComplexMatrix::Zero(n, n);
    t.tmp = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        t.tpp(i, i) = std::exp(I * phases[i]);
        t.tmm(i, i) = std::exp(-I * phases[i]);
    }
    t.energy = energy;
    t.velocities = velocities;
    return t;
}

TransferMatrix compose(const TransferMatrix& lhs, const TransferMatrix& rhs) {
    const Eigen::Index n = rhs.tpp.rows();
    ComplexMatrix big_l(2 * n, 2 * n), big_r(2 * n, 2 * n);
    big_l << lhs.tpp, lhs.tpm, lhs.tmp, lhs.tmm;
    big_r << rhs.tpp, rhs.tpm, rhs.tmp, rhs.tmm;
    const ComplexMatrix prod = big_l * big_r;
    TransferMatrix out;
    out.tpp = prod.topLeftCorner(n, n);
    out.tpm = prod.topRightCorner(n, n);
    out.tmp = prod.bottomLeftCorner(n, n);
    out.tmm = prod.bottomRightCorner(n, n);
    out.energy = rhs.energy;
    out.velocities = rhs.velocities;
    return out;
}

ScatteringMatrix transfer_to_smatrix(const TransferMatrix& t) {
    const Eigen::Index n = t.tmm.rows();
    Eigen::FullPivLU<ComplexMatrix> lu(t.tmm);
    if (!lu.isInvertible())
        throw SingularBlockError("transfer_to_smatrix: T-- block is singular");
    const ComplexMatrix tmm_inv = lu.inverse();

    ScatteringMatrix out;
    out.s.resize(2 * n, 2 * n);
    out.s.topLeftCorner(n, n) = -tmm_inv * t.tmp;
    out.s.topRightCorner(n, n) = tmm_inv;
    out.s.bottomLeftCorner(n, n) = t.tpp - t.tpm * tmm_inv * t.tmp;
    out.s.bottomRightCorner(n, n) = t.tpm * tmm_inv;
    out.energy = t.energy;
    out.velocities = t.velocities;
    out.velocities.insert(out.velocities.end(), t.velocities.begin(), t.velocities.end());
    return out;
}

TransferMatrix smatrix_to_transfer(const ScatteringMatrix& s) {
    const Eigen::Index n = s.s.rows() / 2;
    const ComplexMatrix s_ll = s.s.topLeftCorner(n, n);
    const ComplexMatrix s_lr = s.s.topRightCorner(n, n);
    const ComplexMatrix s_rl = s.s.bottomLeftCorner(n, n);
    const ComplexMatrix s_rr = s.s.bottomRightCorner(n, n);
    Eigen::FullPivLU<ComplexMatrix> lu(s_lr);
    if (!lu.isInvertible())
        throw SingularBlockError("smatrix_to_transfer: right-to-left block is singular");
    const ComplexMatrix s_lr_inv = lu.inverse();

    TransferMatrix t;
    t.tmm = s_lr_inv;
    t.tmp = -s_lr_inv * s_ll;
    t.tpm = s_rr * s_lr_inv;
    t.tpp = s_rl - s_rr * s_lr_inv * s_ll;
    t.energy = s.energy;
    t.velocities.assign(s.velocities.begin(), s.velocities.begin() + n);
    return t;
}

namespace {

struct ChannelSplit {
    std::vector<int> open, closed;
    std::vector<double> v;  // open-channel velocities
    std::vector<double> u;  // closed-channel decay velocities
};

ChannelSplit split_channels(double energy, const std::vector<double>& thresholds,
                            double mass) {
    ChannelSplit cs;
    for (int n = 0; n < static_cast<int>(thresholds.size()); ++n) {
        const double de = energy - thresholds[n];
        if (de == 0.0)
            throw NoOpenChannelError(
                "inelastic_delta_smatrix: energy exactly at a channel threshold");
        if (de > 0.0) {
            cs.open.push_back(n);
            cs.v.push_back(std::sqrt(2.0 * mass * de) / mass);
        } else {
            cs.closed.push_back(n);
            cs.u.push_back(std::sqrt(-2.0 * mass * de) / mass);
        }
    }
    if (cs.open.empty())
        throw NoOpenChannelError("inelastic_delta_smatrix: no open channel at this energy");
    return cs;
}

}  // namespace

ComplexMatrix inelastic_effective_m(const ComplexMatrix& q, double energy,
                                    const std::vector<double>& thresholds, double mass) {
    if (q.rows() != q.cols() ||
        q.rows() != static_cast<Eigen::Index>(thresholds.size()))
        throw DimensionMismatchError("inelastic_effective_m: Q must be square over channels");
    const ChannelSplit cs = split_channels(energy, thresholds, mass);
    const int nv = static_cast<int>(cs.open.size());
    const int nu = static_cast<int>(cs.closed.size());

    ComplexMatrix m_vv(nv, nv), m_vu(nv, nu), m_uv(nu, nv), m_uu(nu, nu);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            m_vv(i, j) = q(cs.open[i], cs.open[j]) / std::sqrt(cs.v[i] * cs.v[j]);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nu; ++j)
            m_vu(i, j) = q(cs.open[i], cs.closed[j]) / std::sqrt(cs.v[i] * cs.u[j]);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            m_uv(i, j) = q(cs.closed[i], cs.open[j]) / std::sqrt(cs.u[i] * cs.v[j]);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j)
            m_uu(i, j) = q(cs.closed[i], cs.closed[j]) / std::sqrt(cs.u[i] * cs.u[j]);

    if (nu == 0) return m_vv;
    const ComplexMatrix inner =
        (ComplexMatrix::Identity(nu, nu) + m_uu).fullPivLu().solve(m_uv);
    return m_vv - m_vu * inner;
}

ScatteringMatrix inelastic_delta_smatrix(const ComplexMatrix& q, double energy,
                                         const std::vector<double>& thresholds,
                                         double mass) {
    const ChannelSplit cs = split_channels(energy, thresholds, mass);
    const ComplexMatrix m_eff = inelastic_effective_m(q, energy, thresholds, mass);
    ScatteringMatrix out = transfer_to_smatrix(delta_transfer(m_eff, energy, cs.v));
    std::vector<double> open_thresholds;
    for (int n : cs.open) open_thresholds.push_back(thresholds[n]);
    out.thresholds = open_thresholds;
    out.thresholds.insert(out.thresholds.end(), open_thresholds.begin(),
                          open_thresholds.end());
    return out;
}

}  // namespace qmkit::quasi1d
