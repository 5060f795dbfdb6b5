// scatter.hpp -- point scatterers, junctions, transfer matrices and
// multichannel (inelastic) delta scattering in quasi-1D geometry.
//
// Radial channel wavefunctions are written A exp(-ikr) + B exp(+ikr) with
// flux normalization, so B = S A relates ingoing to outgoing amplitudes and
// the physical reflection amplitude sits on the diagonal of S for a
// two-lead scatterer.

#pragma once

#include "qmkit/core/types.hpp"

#include <optional>
#include <vector>

namespace qmkit::quasi1d {

struct InvalidGError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularBlockError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoOpenChannelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ScatteringMatrix {
    ComplexMatrix s;
    double energy = 0.0;
    std::vector<double> velocities;            // one per channel, > 0
    std::vector<double> thresholds;            // optional channel thresholds

    int channels() const { return static_cast<int>(s.rows()); }
    double unitarity_defect() const {
        return (s.adjoint() * s - ComplexMatrix::Identity(s.rows(), s.cols()))
            .cwiseAbs()
            .maxCoeff();
    }
    double reciprocity_defect() const { return (s - s.transpose()).cwiseAbs().maxCoeff(); }
};

// r = -i(u/v)/(1 + i(u/v)),  t = 1 + r;  |r|^2 + |t|^2 = 1 and
// |t|^2 = g = 1/(1 + (u/v)^2).
struct DeltaAmplitudes {
    Complex r;
    Complex t;
    double g;  // transmission |t|^2
};
DeltaAmplitudes delta_amplitudes(double u, double v_e);

// M-wire delta junction: S_ab = delta_ab - (2/M) / (1 + i(u/v)); the
// u -> infinity limit is the identity (total reflection in this sign
// convention).  With `row_swapped` the two-wire matrix is returned in the
// transmission-on-the-diagonal ordering (outgoing labels exchanged),
// which is only defined for M = 2.
ScatteringMatrix junction_smatrix(int wires, double u, double v_e,
                                  bool row_swapped = false);

// two-barrier transmission 1 / (1 + 4 (1-g)/g^2 sin^2 phi)
double fabry_perot(double g, double phi);

// (B~_R, A~_R)^T = T (A~_L, B~_L)^T in flux-normalized amplitudes; the
// blocks act on the open channels.
struct TransferMatrix {
    ComplexMatrix tpp, tpm, tmp, tmm;
    double energy = 0.0;
    std::vector<double> velocities;
};

// single multichannel delta with matrix M: T++ = 1 - iM, T+- = -iM,
// T-+ = +iM, T-- = 1 + iM
TransferMatrix delta_transfer(const ComplexMatrix& m_matrix, double energy,
                              const std::vector<double>& velocities);

// free propagation over optical phase phi per channel
TransferMatrix free_transfer(const std::vector<double>& phases, double energy,
                             const std::vector<double>& velocities);

// chained composition: result = rhs applied first, then lhs
TransferMatrix compose(const TransferMatrix& lhs, const TransferMatrix& rhs);

// S_LL = -Tmm^-1 Tmp, S_LR = Tmm^-1, S_RL = Tpp - Tpm Tmm^-1 Tmp,
// S_RR = Tpm Tmm^-1; the result is the full 2N x 2N scattering matrix in
// (left block, right block) channel order.
ScatteringMatrix transfer_to_smatrix(const TransferMatrix& t);
TransferMatrix smatrix_to_transfer(const ScatteringMatrix& s);

// Multichannel delta with internal levels: channels split open/closed at
// the total energy, the closed ones are eliminated, and the S matrix over
// the 2N open channels (left block then right block) is returned.
// Channel energies exactly at threshold are rejected.
ScatteringMatrix inelastic_delta_smatrix(const ComplexMatrix& q, double energy,
                                         const std::vector<double>& thresholds,
                                         double mass = 1.0);

// The effective coupling matrix of the open channels after eliminating the
// closed ones: M_vv - M_vu (1 + M_uu)^-1 M_uv.
ComplexMatrix inelastic_effective_m(const ComplexMatrix& q, double energy,
                                    const std::vector<double>& thresholds,
                                    double mass = 1.0);

}  // namespace qmkit::quasi1d
