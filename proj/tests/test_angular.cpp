#include "qmkit/angular/coupling.hpp"
#include "qmkit/angular/spin.hpp"
#include "qmkit/angular/zeeman.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qmkit;
using namespace qmkit::angular;

namespace {

double commutator_defect(const SpinRepresentation& rep) {
    const ComplexMatrix cxy = rep.jx * rep.jy - rep.jy * rep.jx - I * rep.jz;
    const ComplexMatrix cyz = rep.jy * rep.jz - rep.jz * rep.jy - I * rep.jx;
    const ComplexMatrix czx = rep.jz * rep.jx - rep.jx * rep.jz - I * rep.jy;
    return std::max({cxy.cwiseAbs().maxCoeff(), cyz.cwiseAbs().maxCoeff(),
                     czx.cwiseAbs().maxCoeff()});
}

}  // namespace

TEST_CASE("build_spin_rep: j=1/2 gives the Pauli halves") {
    const auto rep = build_spin_rep(1);
    ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 0.5, 0.5, 0;
    sy << 0, Complex(0, -0.5), Complex(0, 0.5), 0;
    sz << 0.5, 0, 0, -0.5;
    CHECK((rep.jx - sx).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((rep.jy - sy).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((rep.jz - sz).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("build_spin_rep: j=1 standard matrices") {
    const auto rep = build_spin_rep(2);
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix sx(3, 3);
    sx << 0, r, 0, r, 0, r, 0, r, 0;
    CHECK((rep.jx - sx).cwiseAbs().maxCoeff() < 1e-15);
    ComplexMatrix splus(3, 3);
    splus << 0, std::sqrt(2.0), 0, 0, 0, std::sqrt(2.0), 0, 0, 0;
    CHECK((rep.jplus - splus).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::real(rep.jz(0, 0)) == doctest::Approx(1.0));
    CHECK(std::real(rep.jz(2, 2)) == doctest::Approx(-1.0));
}

TEST_CASE("build_spin_rep: j=0 is the 1x1 zero representation") {
    const auto rep = build_spin_rep(0);
    CHECK(rep.dim() == 1);
    CHECK(std::abs(rep.jx(0, 0)) == 0.0);
    CHECK(std::abs(rep.jz(0, 0)) == 0.0);
}

TEST_CASE("build_spin_rep: algebra invariants for all j <= 6") {
    for (int two_j = 0; two_j <= 12; ++two_j) {
        const auto rep = build_spin_rep(two_j);
        CHECK(commutator_defect(rep) < 1e-12);
        const double j = 0.5 * two_j;
        const ComplexMatrix casimir =
            rep.jx * rep.jx + rep.jy * rep.jy + rep.jz * rep.jz;
        CHECK((casimir - j * (j + 1.0) * ComplexMatrix::Identity(rep.dim(), rep.dim()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
        CHECK(rep.jplus.imag().cwiseAbs().maxCoeff() == 0.0);
        CHECK(rep.jplus.real().minCoeff() >= 0.0);
    }
    CHECK_THROWS_AS(build_spin_rep(-1), InvalidJError);
}

TEST_CASE("rotation_matrix: z-axis rotation phases for j=1/2") {
    const auto rep = build_spin_rep(1);
    const double phi = 0.77;
    const ComplexMatrix r = rotation_matrix(rep, Vec3(0, 0, 1), phi);
    CHECK(std::abs(r(0, 0) - std::exp(-I * phi / 2.0)) < 1e-13);
    CHECK(std::abs(r(1, 1) - std::exp(+I * phi / 2.0)) < 1e-13);
    CHECK(std::abs(r(0, 1)) < 1e-14);
}

TEST_CASE("rotation_matrix: 2pi rotation gives (-1)^(2j)") {
    for (int two_j = 0; two_j <= 7; ++two_j) {
        const auto rep = build_spin_rep(two_j);
        const ComplexMatrix r = rotation_matrix(rep, Vec3(0, 1, 0), 2.0 * M_PI);
        const double sign = (two_j % 2 == 0) ? 1.0 : -1.0;
        CHECK((r - sign * ComplexMatrix::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff() <
              1e-12);
    }
}

TEST_CASE("rotation_matrix: matches the j=1/2 and j=1 closed forms") {
    const auto rep_half = build_spin_rep(1);
    const auto rep_one = build_spin_rep(2);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 25; ++trial) {
        Vec3 n(gauss(rng), gauss(rng), gauss(rng));
        n.normalize();
        const double phi = angle(rng);

        // cos(phi/2) 1 - i sin(phi/2) sigma_n
        const ComplexMatrix sigma_n = 2.0 * (n.x() * rep_half.jx + n.y() * rep_half.jy +
                                             n.z() * rep_half.jz);
        const ComplexMatrix closed_half =
            std::cos(phi / 2.0) * ComplexMatrix::Identity(2, 2) -
            I * std::sin(phi / 2.0) * sigma_n;
        CHECK((rotation_matrix(rep_half, n, phi) - closed_half).cwiseAbs().maxCoeff() < 1e-12);

        // 1 - i sin(phi) S_n - (1 - cos(phi)) S_n^2
        const ComplexMatrix sn =
            n.x() * rep_one.jx + n.y() * rep_one.jy + n.z() * rep_one.jz;
        const ComplexMatrix closed_one = ComplexMatrix::Identity(3, 3) -
                                         I * std::sin(phi) * sn -
                                         (1.0 - std::cos(phi)) * sn * sn;
        CHECK((rotation_matrix(rep_one, n, phi) - closed_one).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK_THROWS_AS(rotation_matrix(rep_half, Vec3(0, 0, 2), 1.0), NonUnitAxisError);
}

TEST_CASE("euler_rotation: trivial angles give the identity") {
    const auto rep = build_spin_rep(3);
    CHECK((euler_rotation(rep, 0, 0, 0) - ComplexMatrix::Identity(4, 4)).norm() < 1e-14);
}

TEST_CASE("euler_rotation: polarization state of spin 1/2") {
    const auto rep = build_spin_rep(1);
    const double theta = 1.1, phi = -0.6;
    ComplexVector up(2);
    up << 1, 0;
    const ComplexVector state = euler_rotation(rep, phi, theta, 0.0) * up;
    CHECK(std::abs(state(0) - std::exp(-I * phi / 2.0) * std::cos(theta / 2.0)) < 1e-12);
    CHECK(std::abs(state(1) - std::exp(+I * phi / 2.0) * std::sin(theta / 2.0)) < 1e-12);
}

TEST_CASE("euler_rotation: circularly polarized spin-1 state") {
    const auto rep = build_spin_rep(2);
    const double theta = 0.8, phi = 2.1;
    ComplexVector up(3);
    up << 1, 0, 0;
    const ComplexVector state = euler_rotation(rep, phi, theta, 0.0) * up;
    CHECK(std::abs(state(0) - 0.5 * (1.0 + std::cos(theta)) * std::exp(-I * phi)) < 1e-12);
    CHECK(std::abs(state(1) - std::sin(theta) / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(state(2) - 0.5 * (1.0 - std::cos(theta)) * std::exp(+I * phi)) < 1e-12);
}

TEST_CASE("su2_axis_angle: two 90-degree rotations combine to 120 degrees") {
    const auto rep = build_spin_rep(1);
    const ComplexMatrix u = rotation_matrix(rep, Vec3(0, 1, 0), M_PI / 2.0) *
                            rotation_matrix(rep, Vec3(0, 0, 1), M_PI / 2.0);
    const AxisAngle aa = su2_axis_angle(u);
    CHECK(aa.angle == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-12));
    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(aa.axis.x() == doctest::Approx(r3).epsilon(1e-12));
    CHECK(aa.axis.y() == doctest::Approx(r3).epsilon(1e-12));
    CHECK(aa.axis.z() == doctest::Approx(r3).epsilon(1e-12));
    // round trip up to global sign
    const ComplexMatrix rebuilt = rotation_matrix(rep, aa.axis, aa.angle);
    CHECK(((rebuilt - u).cwiseAbs().maxCoeff() < 1e-10 ||
           (rebuilt + u).cwiseAbs().maxCoeff() < 1e-10));
}

TEST_CASE("su2_axis_angle: identity returns zero angle about +z") {
    const AxisAngle aa = su2_axis_angle(ComplexMatrix::Identity(2, 2));
    CHECK(aa.angle == 0.0);
    CHECK(aa.axis.z() == doctest::Approx(1.0));
}

TEST_CASE("su2_axis_angle: conjugated y-rotation is a rotation about x") {
    const auto rep = build_spin_rep(1);
    const ComplexMatrix u = rotation_matrix(rep, Vec3(0, 0, 1), -M_PI / 2.0) *
                            rotation_matrix(rep, Vec3(0, 1, 0), M_PI / 2.0) *
                            rotation_matrix(rep, Vec3(0, 0, 1), M_PI / 2.0);
    const AxisAngle aa = su2_axis_angle(u);
    CHECK(aa.angle == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    CHECK(aa.axis.x() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(aa.axis.y()) < 1e-12);
    CHECK(std::abs(aa.axis.z()) < 1e-12);

    CHECK_THROWS_AS(su2_axis_angle(2.0 * ComplexMatrix::Identity(2, 2)), NotSU2Error);
}

TEST_CASE("add_angular_momentum: 2x2 = 3 + 1 printed table") {
    const auto d = add_angular_momentum(1, 1);
    REQUIRE(d.two_multiplets.size() == 2);
    CHECK(d.two_multiplets[0] == 2);
    CHECK(d.two_multiplets[1] == 0);
    const double r = 1.0 / std::sqrt(2.0);
    RealMatrix expected(4, 4);
    // rows: uu, ud, du, dd; columns: |1,1>,|1,0>,|1,-1>,|0,0>
    expected << 1, 0, 0, 0,
                0, r, 0, r,
                0, r, 0, -r,
                0, 0, 1, 0;
    CHECK((d.t - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("add_angular_momentum: 3x2 = 4 + 2 printed table up to multiplet sign") {
    const auto d = add_angular_momentum(2, 1);
    REQUIRE(d.two_multiplets.size() == 2);
    CHECK(d.two_multiplets[0] == 3);
    CHECK(d.two_multiplets[1] == 1);
    const double a = std::sqrt(1.0 / 3.0), b = std::sqrt(2.0 / 3.0);
    RealMatrix expected(6, 6);
    // rows: Uu Ud Mu Md Du Dd (U/M/D: m_l = 1,0,-1); cols: j=3/2 then j=1/2
    expected << 1, 0, 0, 0, 0, 0,
                0, a, 0, 0, -b, 0,
                0, b, 0, 0, a, 0,
                0, 0, b, 0, 0, -a,
                0, 0, a, 0, 0, b,
                0, 0, 0, 1, 0, 0;
    // per-multiplet global sign freedom
    for (int block = 0; block < 2; ++block) {
        const int offset = (block == 0) ? 0 : 4;
        const int len = (block == 0) ? 4 : 2;
        double best = 1e100;
        for (double sign : {1.0, -1.0}) {
            const double diff = (d.t.middleCols(offset, len) -
                                 sign * expected.middleCols(offset, len))
                                    .cwiseAbs()
                                    .maxCoeff();
            best = std::min(best, diff);
        }
        CHECK(best < 1e-12);
    }
    // this convention makes the head coefficient of maximal m1 positive
    CHECK(d.t(1, 4) == doctest::Approx(b));
    CHECK(d.t(2, 4) == doctest::Approx(-a));
}

TEST_CASE("add_angular_momentum: coupling with j2=0 is the identity") {
    const auto d = add_angular_momentum(5, 0);
    REQUIRE(d.two_multiplets.size() == 1);
    CHECK(d.two_multiplets[0] == 5);
    CHECK((d.t - RealMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("add_angular_momentum: orthogonality, dimension count, Jz blocks for j <= 4") {
    for (int two_j1 = 0; two_j1 <= 8; two_j1 += 2) {
        for (int two_j2 = 1; two_j2 <= 8; two_j2 += 3) {
            const auto d = add_angular_momentum(two_j1, two_j2);
            const int dim = (two_j1 + 1) * (two_j2 + 1);
            CHECK((d.t.transpose() * d.t - RealMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <
                  1e-12);
            int total = 0;
            for (int tj : d.two_multiplets) total += tj + 1;
            CHECK(total == dim);

            // T block-diagonalizes Jz exactly: column m_j sectors
            const auto r1 = build_spin_rep(two_j1);
            const auto r2 = build_spin_rep(two_j2);
            const ComplexMatrix jz =
                kron(r1.jz, ComplexMatrix::Identity(two_j2 + 1, two_j2 + 1)) +
                kron(ComplexMatrix::Identity(two_j1 + 1, two_j1 + 1), r2.jz);
            const RealMatrix jz_new = (d.t.transpose() * jz.real() * d.t);
            int col = 0;
            for (int tj : d.two_multiplets)
                for (int two_mj = tj; two_mj >= -tj; two_mj -= 2, ++col)
                    CHECK(jz_new(col, col) == doctest::Approx(0.5 * two_mj).epsilon(1e-12));
            CHECK((jz_new - RealMatrix(jz_new.diagonal().asDiagonal())).cwiseAbs().maxCoeff() <
                  1e-12);
        }
    }
}

TEST_CASE("j_squared_product_basis: printed 2x2 and 3x2 matrices") {
    RealMatrix j2_22 = j_squared_product_basis(add_angular_momentum(1, 1));
    RealMatrix expected22(4, 4);
    expected22 << 2, 0, 0, 0,
                  0, 1, 1, 0,
                  0, 1, 1, 0,
                  0, 0, 0, 2;
    CHECK((j2_22 - expected22).cwiseAbs().maxCoeff() < 1e-12);

    RealMatrix j2_32 = j_squared_product_basis(add_angular_momentum(2, 1));
    const double s2 = std::sqrt(2.0);
    RealMatrix expected32(6, 6);
    expected32 << 15.0 / 4, 0, 0, 0, 0, 0,
                  0, 7.0 / 4, s2, 0, 0, 0,
                  0, s2, 11.0 / 4, 0, 0, 0,
                  0, 0, 0, 11.0 / 4, s2, 0,
                  0, 0, 0, s2, 7.0 / 4, 0,
                  0, 0, 0, 0, 0, 15.0 / 4;
    CHECK((j2_32 - expected32).cwiseAbs().maxCoeff() < 1e-12);

    // j (x) 0 gives j(j+1) identity
    RealMatrix j2_j0 = j_squared_product_basis(add_angular_momentum(4, 0));
    CHECK((j2_j0 - 6.0 * RealMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("add_angular_momentum: (2l+1)x2 closed-form |alpha|, |beta|") {
    // for j = l +- 1/2: alpha = sqrt((l + 1/2 + m)/(2l+1)), beta with -m
    for (int two_l : {2, 4, 6}) {
        const double l = 0.5 * two_l;
        const auto d = add_angular_momentum(two_l, 1);
        for (int two_m = -two_l + 1; two_m <= two_l - 1; two_m += 2) {
            const double m = 0.5 * two_m;
            const double alpha = std::sqrt((l + 0.5 + m) / (2.0 * l + 1.0));
            const double beta = std::sqrt((l + 0.5 - m) / (2.0 * l + 1.0));
            // row indices of |m+1/2, down> and |m-1/2, up>
            const int i_up = (two_l - (two_m - 1)) / 2;    // m_l = m - 1/2, m_s = +1/2
            const int i_dn = (two_l - (two_m + 1)) / 2;    // m_l = m + 1/2, m_s = -1/2
            const int row_up = i_up * 2 + 0;
            const int row_dn = i_dn * 2 + 1;
            // columns: multiplet 0 is j = l+1/2, multiplet 1 is j = l-1/2
            const int col_plus = (two_l + 1 - (two_m)) / 2;
            const int col_minus = (two_l + 2) + (two_l - 1 - two_m) / 2;
            CHECK(std::abs(d.t(row_up, col_plus)) == doctest::Approx(alpha).epsilon(1e-12));
            CHECK(std::abs(d.t(row_dn, col_plus)) == doctest::Approx(beta).epsilon(1e-12));
            CHECK(std::abs(d.t(row_up, col_minus)) == doctest::Approx(beta).epsilon(1e-12));
            CHECK(std::abs(d.t(row_dn, col_minus)) == doctest::Approx(alpha).epsilon(1e-12));
        }
    }
}

TEST_CASE("wigner_3j: selection rules and consistency with the CG matrix") {
    CHECK(wigner_3j(1, 1, 0, 1, 1, 2) == 0.0);   // m_l + m_s != m
    CHECK(wigner_3j(1, 1, 4, 1, -1, 0) == 0.0);  // triangle violation

    // singlet coefficient 1/sqrt(2): (1/2 1/2 0; 1/2 -1/2 0)
    const double w = wigner_3j(1, 1, 0, 1, -1, 0);
    CHECK(std::abs(w) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    // invert the relation against the module's own CG entry
    const auto d = add_angular_momentum(1, 1);
    const double t_entry = d.t(1, 3);  // <up,down | 0,0>
    const int phase_exp = (1 - 1 + 0) / 2;
    const double recovered = (phase_exp % 2 == 0 ? 1.0 : -1.0) * t_entry / std::sqrt(1.0);
    CHECK(w == doctest::Approx(recovered).epsilon(1e-12));

    // stretched state (1 1/2 3/2; 1 1/2 -3/2 projection): T entry is 1
    const double w2 = wigner_3j(2, 1, 3, 2, 1, 3);
    CHECK(std::abs(w2) == doctest::Approx(1.0 / std::sqrt(4.0)).epsilon(1e-12));
}

TEST_CASE("wigner_eckart_g: printed g factors and sum rule") {
    const auto f1 = wigner_eckart_g(3, 2, 1);  // j=3/2, l=1, s=1/2
    CHECK(f1.g_l == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(f1.g_s == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    const auto f2 = wigner_eckart_g(1, 2, 1);  // j=1/2, l=1, s=1/2
    CHECK(f2.g_l == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(f2.g_s == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    const auto f3 = wigner_eckart_g(4, 4, 0);  // s=0, j=l
    CHECK(f3.g_l == doctest::Approx(1.0));
    CHECK(f3.g_s == doctest::Approx(0.0));
    CHECK(f1.g_l + f1.g_s == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(wigner_eckart_g(6, 2, 1), TriangleViolationError);
}

TEST_CASE("zeeman_spectrum: zero-field fine structure {v/2 x4, -v x2}") {
    const double v = 0.37;
    const auto spectra = zeeman_spectrum(v, 2.0023, {0.0});
    const RealVector& e = spectra[0];
    CHECK(e(0) == doctest::Approx(-v).epsilon(1e-12));
    CHECK(e(1) == doctest::Approx(-v).epsilon(1e-12));
    for (int k = 2; k < 6; ++k) CHECK(e(k) == doctest::Approx(v / 2.0).epsilon(1e-12));
}

TEST_CASE("zeeman_spectrum: exact stretched levels v/2 +- (1+g/2)h") {
    const double v = 1.0, g = 2.0023;
    for (double h : {0.05, 0.4, 1.3, 7.0}) {
        const auto e = zeeman_spectrum(v, g, {h})[0];
        const double target_plus = v / 2.0 + (1.0 + g / 2.0) * h;
        const double target_minus = v / 2.0 - (1.0 + g / 2.0) * h;
        double best_p = 1e100, best_m = 1e100;
        for (int k = 0; k < 6; ++k) {
            best_p = std::min(best_p, std::abs(e(k) - target_plus));
            best_m = std::min(best_m, std::abs(e(k) - target_minus));
        }
        CHECK(best_p < 1e-10);
        CHECK(best_m < 1e-10);
    }
}

TEST_CASE("zeeman_spectrum: v=0 gives (m_l + g m_s) h exactly") {
    const double g = 2.0023, h = 0.9;
    const auto e = zeeman_spectrum(0.0, g, {h})[0];
    std::vector<double> expected;
    for (int ml : {-1, 0, 1})
        for (double ms : {-0.5, 0.5}) expected.push_back((ml + g * ms) * h);
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 6; ++k) CHECK(e(k) == doctest::Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("zeeman_spectrum: strong-field limit approaches the v=0 formula") {
    const double v = 1.0, g = 2.0023;
    for (double h : {1e3, 1e4}) {
        const auto e = zeeman_spectrum(v, g, {h})[0];
        const auto e0 = zeeman_spectrum(0.0, g, {h})[0];
        double rel = 0.0;
        for (int k = 0; k < 6; ++k)
            rel = std::max(rel, std::abs(e(k) - e0(k)) / h);
        CHECK(rel < 1.0 / h * 2.0);  // O(v^2/h) deviation
    }
    // monotone convergence between h = 1e3 v and 1e4 v
    const auto e3 = zeeman_spectrum(v, g, {1e3})[0];
    const auto e4 = zeeman_spectrum(v, g, {1e4})[0];
    const auto f3 = zeeman_spectrum(0.0, g, {1e3})[0];
    const auto f4 = zeeman_spectrum(0.0, g, {1e4})[0];
    CHECK((e4 - f4).cwiseAbs().maxCoeff() / 1e4 < (e3 - f3).cwiseAbs().maxCoeff() / 1e3);
}
