#include "qmkit/angular/spin.hpp"
#include "qmkit/fock/basis.hpp"
#include "qmkit/fock/dimer.hpp"
#include "qmkit/fock/info.hpp"
#include "qmkit/fock/operators.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qmkit;
using namespace qmkit::fock;

TEST_CASE("ladder: bosonic square-root factors") {
    const auto basis = FockBasis::boson_capped(1, 5);
    const auto [a, adag] = ladder(basis, 0);
    // a |3> = sqrt(3) |2>
    CHECK(std::abs(a(2, 3) - std::sqrt(3.0)) < 1e-14);
    CHECK(std::abs(adag(4, 3) - 2.0) < 1e-14);
    // [a, a+] = 1 away from the cap
    const ComplexMatrix comm = a * adag - adag * a;
    for (int n = 0; n < 5; ++n) CHECK(std::abs(comm(n, n) - 1.0) < 1e-14);
}

TEST_CASE("ladder: fermionic sign string over higher orbitals") {
    const auto basis = FockBasis::fermion(3);
    const auto [a1, a1dag] = ladder(basis, 0);
    const auto [a2, a2dag] = ladder(basis, 1);

    ComplexVector vacuum = ComplexVector::Zero(basis.dim());
    vacuum(basis.index.at({0, 0, 0})) = 1.0;

    const ComplexVector ordered = a2dag * (a1dag * vacuum);
    const ComplexVector reversed = a1dag * (a2dag * vacuum);
    const int idx11 = basis.index.at({1, 1, 0});
    CHECK(std::abs(ordered(idx11) - 1.0) < 1e-14);
    CHECK(std::abs(reversed(idx11) + 1.0) < 1e-14);
    CHECK((ordered + reversed).norm() < 1e-14);

    // annihilating an empty orbital gives the zero vector
    CHECK((a1 * vacuum).norm() == 0.0);
}

TEST_CASE("ladder: fermion anticommutator battery for M <= 6") {
    for (int m : {2, 4, 6}) {
        const auto basis = FockBasis::fermion(m);
        std::vector<LadderPair> ops;
        for (int r = 0; r < m; ++r) ops.push_back(ladder(basis, r));
        const ComplexMatrix id = ComplexMatrix::Identity(basis.dim(), basis.dim());
        for (int r = 0; r < m; ++r) {
            for (int s = 0; s < m; ++s) {
                const ComplexMatrix anti =
                    ops[r].annihilate * ops[s].create + ops[s].create * ops[r].annihilate;
                const ComplexMatrix expected = (r == s) ? id : ComplexMatrix::Zero(id.rows(), id.cols());
                CHECK((anti - expected).cwiseAbs().maxCoeff() == 0.0);
                const ComplexMatrix aa =
                    ops[r].annihilate * ops[s].annihilate + ops[s].annihilate * ops[r].annihilate;
                CHECK(aa.cwiseAbs().maxCoeff() == 0.0);
            }
        }
    }
}

TEST_CASE("ladder: boson commutator on interior states") {
    const auto basis = FockBasis::boson_capped(2, 4);
    const auto [a0, a0dag] = ladder(basis, 0);
    const auto [a1, a1dag] = ladder(basis, 1);
    const ComplexMatrix c01 = a0 * a1dag - a1dag * a0;
    const ComplexMatrix c00 = a0 * a0dag - a0dag * a0;
    for (int i = 0; i < basis.dim(); ++i) {
        const auto& occ = basis.states[i];
        if (occ[0] >= 3 || occ[1] >= 3) continue;  // interior only
        for (int j = 0; j < basis.dim(); ++j) {
            const auto& occ_j = basis.states[j];
            if (occ_j[0] >= 3 || occ_j[1] >= 3) continue;
            CHECK(std::abs(c01(j, i)) < 1e-14);
            CHECK(std::abs(c00(j, i) - (i == j ? 1.0 : 0.0)) < 1e-14);
        }
    }
}

TEST_CASE("one_body_operator: boson amplification and fermion blocking") {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(1, 0) = 1.0;
    h(0, 1) = 1.0;

    // boson: |<n1-1, n2+1 | V | n1, n2>|^2 = (n2 + 1) n1 |V21|^2
    const auto bosons = FockBasis::boson_sector(2, 5);
    const ComplexMatrix v = one_body_operator(bosons, h);
    const int from = bosons.index.at({3, 2});
    const int to = bosons.index.at({2, 3});
    CHECK(std::norm(v(to, from)) == doctest::Approx(3.0 * 3.0).epsilon(1e-12));

    // fermion: the same element vanishes when the target is occupied
    const auto fermions = FockBasis::fermion(2);
    const ComplexMatrix vf = one_body_operator(fermions, h);
    const int blocked = fermions.index.at({1, 1});
    for (int j = 0; j < fermions.dim(); ++j)
        if (j != blocked) CHECK(std::abs(vf(j, blocked)) < 1e-14);

    // diagonal h counts particles
    ComplexMatrix hd = ComplexMatrix::Zero(2, 2);
    hd(0, 0) = 0.3;
    hd(1, 1) = -0.7;
    const ComplexMatrix vd = one_body_operator(bosons, hd);
    for (int i = 0; i < bosons.dim(); ++i) {
        const auto& occ = bosons.states[i];
        CHECK(vd(i, i).real() == doctest::Approx(0.3 * occ[0] - 0.7 * occ[1]));
        for (int j = 0; j < bosons.dim(); ++j)
            if (i != j) CHECK(std::abs(vd(j, i)) < 1e-14);
    }
}

TEST_CASE("one_body_operator: basis-change covariance on the one-particle sector") {
    std::mt19937 rng(57);
    std::normal_distribution<double> dist;
    const int m = 4;
    ComplexMatrix h(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) h(i, j) = Complex(dist(rng), dist(rng));
    h = 0.5 * (h + h.adjoint().eval());

    // unitary orbital rotation from a random Hermitian generator
    ComplexMatrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = Complex(dist(rng), dist(rng));
    g = 0.5 * (g + g.adjoint().eval());
    const ComplexMatrix t = evolve_unitary(g, 1.0);

    const auto basis = FockBasis::boson_sector(m, 1);
    // the one-particle sector inherits the orbital matrix up to index order
    ComplexMatrix perm = ComplexMatrix::Zero(m, m);
    for (int r = 0; r < m; ++r) {
        std::vector<int> occ(m, 0);
        occ[r] = 1;
        perm(basis.index.at(occ), r) = 1.0;
    }
    const ComplexMatrix lhs = one_body_operator(basis, (t * h * t.adjoint()).eval());
    const ComplexMatrix induced = perm * t * perm.adjoint();
    const ComplexMatrix rhs = induced * one_body_operator(basis, h) * induced.adjoint();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("two_body_operator: diagonal interaction and pair counting") {
    const auto basis = FockBasis::boson_sector(2, 4);
    TwoBodyTensor u = TwoBodyTensor::zero(2);
    u.at(0, 0, 0, 0) = 2.0;
    const ComplexMatrix op = two_body_operator(basis, u);
    for (int i = 0; i < basis.dim(); ++i) {
        const int n0 = basis.states[i][0];
        CHECK(op(i, i).real() == doctest::Approx(0.5 * 2.0 * n0 * (n0 - 1)));
    }
    TwoBodyTensor bad = TwoBodyTensor::zero(2);
    bad.at(0, 1, 0, 0) = 1.0;
    CHECK_THROWS_AS(two_body_operator(basis, bad), SymmetryViolationError);
}

TEST_CASE("slater_expectation: matches the full sandwich") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int m = 5;
    const auto basis = FockBasis::fermion(m);
    const std::vector<int> occupied{0, 2, 4};
    std::vector<int> occ_tuple(m, 0);
    for (int k : occupied) occ_tuple[k] = 1;
    const int idx = basis.index.at(occ_tuple);

    for (int trial = 0; trial < 50; ++trial) {
        TwoBodyTensor u = TwoBodyTensor::zero(m);
        for (int kp = 0; kp < m; ++kp)
            for (int lp = 0; lp < m; ++lp)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l) {
                        if (u(kp, lp, k, l) != 0.0) continue;
                        const double val = dist(rng);
                        u.at(kp, lp, k, l) = val;
                        u.at(k, l, kp, lp) = val;
                    }
        const ComplexMatrix op = two_body_operator(basis, u);
        CHECK(op(idx, idx).real() ==
              doctest::Approx(slater_expectation(occupied, u)).epsilon(1e-12));
    }

    // single particle: no pair energy
    CHECK(slater_expectation({2}, TwoBodyTensor::zero(m)) == 0.0);
}

TEST_CASE("bose_hubbard_dimer: ladder and spin constructions agree") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int n : {1, 2, 5, 17, 40}) {
        const double u = dist(rng), k = dist(rng), eps = dist(rng);
        const ComplexMatrix a = bose_hubbard_dimer(n, u, k, eps);
        const ComplexMatrix b = bose_hubbard_dimer_spin(n, u, k, eps);
        const ComplexMatrix diff = a - b;
        const Complex shift = diff(0, 0);
        CHECK((diff - shift * ComplexMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff() <
              1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()));
        CHECK(std::abs(shift) < 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("bose_hubbard_dimer: free-spin spectrum at U = 0") {
    const int n = 6;
    const double k = 1.3;
    const auto ed = hermitian_eig(bose_hubbard_dimer(n, 0.0, k, 0.0));
    // -K Jx has spectrum -K m over m = -N/2 .. N/2
    for (int i = 0; i <= n; ++i)
        CHECK(ed.values(i) == doctest::Approx(-k * (0.5 * n - i)).epsilon(1e-10));
}

TEST_CASE("bose_hubbard_dimer: K=0 interaction ladder with cat degeneracy") {
    const int n = 5;
    const double u = 0.8;
    const ComplexMatrix h = bose_hubbard_dimer(n, u, 0.0, 0.0);
    // diagonal in |n1>, quadratic in m = n1 - N/2, +-m degenerate
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) CHECK(std::abs(h(i, j)) < 1e-14);
    const double e_top = h(0, 0).real();      // m = +N/2
    const double e_bottom = h(n, n).real();   // m = -N/2
    CHECK(e_top == doctest::Approx(e_bottom).epsilon(1e-13));

    // N = 1 reduces to the two-site one-particle Hamiltonian
    const ComplexMatrix h2 = bose_hubbard_dimer(1, 7.7, 2.0, 0.6);
    CHECK(h2(0, 1).real() == doctest::Approx(-1.0));
    CHECK(h2(0, 0).real() - h2(1, 1).real() == doctest::Approx(-0.6));
}

TEST_CASE("dimer_observables: pole state, x-polarized ground state, equator spread") {
    const int n = 12;
    ComplexVector pole = ComplexVector::Zero(n + 1);
    pole(0) = 1.0;  // all particles in site 1
    const auto obs_pole = dimer_observables(pole, n);
    CHECK((obs_pole.polarization - Vec3(0, 0, 1)).norm() < 1e-12);
    CHECK(obs_pole.one_body_purity == doctest::Approx(1.0).epsilon(1e-12));

    // ground state of the U=0 symmetric dimer is polarized along +x
    const auto ed = hermitian_eig(bose_hubbard_dimer(n, 0.0, 1.0, 0.0));
    const auto obs_x = dimer_observables(ed.vectors.col(0), n);
    CHECK(obs_x.polarization.x() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(obs_x.one_body_purity == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(hermiticity_defect(obs_x.rho1) < 1e-12);

    // interaction-induced phase spreading over the equator destroys the
    // one-body coherence of the x-polarized state
    const auto rep = qmkit::angular::build_spin_rep(n);
    const ComplexMatrix spreader = evolve_unitary((rep.jz * rep.jz).eval(), 0.9);
    const auto obs_spread = dimer_observables(spreader * ed.vectors.col(0), n);
    CHECK(obs_spread.one_body_purity < 0.62);
    CHECK(obs_spread.one_body_purity >= 0.5);
}

TEST_CASE("reduce and schmidt: singlet and product states") {
    ComplexVector singlet(4);
    singlet << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
    const auto psi = BipartiteState::from_vector(singlet, 2, 2);
    const ComplexMatrix rho_a = reduce(psi, KeepSide::A);
    CHECK((rho_a - 0.5 * ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(entropy(rho_a) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(entropy_bits(rho_a) == doctest::Approx(1.0).epsilon(1e-12));

    const auto sd = schmidt(psi);
    REQUIRE(sd.p.size() == 2);
    CHECK(sd.p[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sd.p[1] == doctest::Approx(0.5).epsilon(1e-12));

    // product state: single Schmidt weight, zero entropy
    ComplexVector prod(6);
    prod << 1, 2, Complex(0, 1), 2, 4, Complex(0, 2);
    prod.normalize();
    const auto psi_prod = BipartiteState::from_vector(prod, 2, 3);
    const auto sd_prod = schmidt(psi_prod);
    CHECK(sd_prod.p[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(reduce(psi_prod, KeepSide::A)) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("schmidt: reductions of a random pure state share spectra and entropy") {
    std::mt19937 rng(71);
    std::normal_distribution<double> dist;
    ComplexVector psi(21);
    for (int i = 0; i < 21; ++i) psi(i) = Complex(dist(rng), dist(rng));
    psi.normalize();
    const auto state = BipartiteState::from_vector(psi, 3, 7);

    const auto ea = hermitian_eig(reduce(state, KeepSide::A)).values;
    const auto eb = hermitian_eig(reduce(state, KeepSide::B)).values;
    for (int k = 0; k < 3; ++k)
        CHECK(ea(k) == doctest::Approx(eb(4 + k)).epsilon(1e-10));
    CHECK(entropy(reduce(state, KeepSide::A)) ==
          doctest::Approx(entropy(reduce(state, KeepSide::B))).epsilon(1e-10));

    // Schmidt weights sum to one and rebuild the state
    const auto sd = schmidt(state);
    double total = 0.0;
    for (double p : sd.p) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    ComplexMatrix rebuilt = ComplexMatrix::Zero(3, 7);
    for (size_t r = 0; r < sd.p.size(); ++r)
        rebuilt += std::sqrt(sd.p[r]) * sd.a_vectors.col(r) *
                   sd.b_vectors.col(r).transpose();
    CHECK((rebuilt - state.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("entropy: subadditivity on mixtures of product states") {
    std::mt19937 rng(73);
    std::normal_distribution<double> dist;
    const auto random_rho = [&](int d) {
        ComplexMatrix a(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) = Complex(dist(rng), dist(rng));
        ComplexMatrix rho = a * a.adjoint();
        return (rho / rho.trace().real()).eval();
    };
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix rho_ab = 0.5 * kron(random_rho(2), random_rho(3)) +
                                     0.5 * kron(random_rho(2), random_rho(3));
        const ComplexMatrix rho_a = partial_trace(rho_ab, 2, 3, KeepSide::A);
        const ComplexMatrix rho_b = partial_trace(rho_ab, 2, 3, KeepSide::B);
        CHECK(entropy(rho_ab) <= entropy(rho_a) + entropy(rho_b) + 1e-10);
    }
}

TEST_CASE("singlet_correlation: printed values and CHSH violation") {
    CHECK(singlet_correlation(0.0, 0.0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(singlet_correlation(0.0, M_PI / 2.0)) < 1e-12);
    CHECK(singlet_correlation(0.0, M_PI) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(singlet_correlation(0.4, 1.1) ==
          doctest::Approx(-std::cos(0.4 - 1.1)).epsilon(1e-12));

    const double d = M_PI / 4.0;
    CHECK(std::abs(chsh(0.0, d, 2.0 * d, -d)) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    // equal angles: C = -1 three times, minus C = -1 once
    CHECK(chsh(0.3, 0.3, 0.3, 0.3) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("measure: collapse of a pure spin state") {
    ComplexVector psi(2);
    psi << Complex(0.6, 0.0), Complex(0.0, 0.8);
    ComplexMatrix rho = psi * psi.adjoint();
    std::vector<ComplexMatrix> projectors(2, ComplexMatrix::Zero(2, 2));
    projectors[0](0, 0) = 1.0;
    projectors[1](1, 1) = 1.0;

    const auto result = measure(rho, projectors);
    CHECK(result.probabilities[0] == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(result.probabilities[1] == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(std::abs(result.post_state(0, 1)) < 1e-14);
    CHECK(result.post_state.trace().real() == doctest::Approx(1.0).epsilon(1e-14));

    // measurement cannot decrease entropy, and is idempotent
    CHECK(entropy(result.post_state) >= entropy(rho) - 1e-12);
    const auto twice = measure(result.post_state, projectors);
    CHECK((twice.post_state - result.post_state).cwiseAbs().maxCoeff() < 1e-14);

    // already-diagonal states pass through unchanged
    const auto diag = measure(result.post_state, projectors);
    CHECK((diag.post_state - result.post_state).cwiseAbs().maxCoeff() < 1e-14);

    std::vector<ComplexMatrix> incomplete{projectors[0]};
    CHECK_THROWS_AS(measure(rho, incomplete), IncompleteProjectorsError);
}
