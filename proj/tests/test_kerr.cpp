#include <doctest.h>

#include <cmath>
#include <numeric>

#include "phasecat/cat.hpp"
#include "phasecat/errors.hpp"
#include "phasecat/kerr.hpp"
#include "phasecat/oracle.hpp"
#include "support.hpp"

using namespace phasecat;
using phasecat::testing::rotation2;

TEST_CASE("thermal wigner") {
    const double hbar = 1.0;
    const ThermalState vac{0.0, Vec::Zero(2), hbar};
    const ComplexGaussianTerm t0 = thermal_wigner(vac);
    CHECK(term_eval(t0, Vec::Zero(2)).real() == doctest::Approx(1.0 / M_PI));

    const ThermalState warm{1.0, Vec::Zero(2), hbar};
    CHECK(term_eval(thermal_wigner(warm), Vec::Zero(2)).real() ==
          doctest::Approx(1.0 / (3.0 * M_PI)));

    // matches the Bose-Einstein Fock oracle
    const ThermalState half{0.5, (Vec(2) << 0.8, -0.3).finished(), hbar};
    const ComplexGaussianTerm term = thermal_wigner(half);
    const oracle::FockDensity rho = oracle::thermal_density(0.5, hbar, 130, half.center);
    const oracle::FockWignerEvaluator eval(rho);
    NormalSampler rng(139);
    for (int i = 0; i < 8; ++i) {
        Vec x(2);
        x << rng(), rng();
        CHECK(eval(x) == doctest::Approx(term_eval(term, x).real()).epsilon(1e-8));
    }

    CHECK_THROWS_AS(thermal_wigner(ThermalState{-0.1, Vec::Zero(2), hbar}), InvalidArgument);
}

TEST_CASE("kerr coefficients") {
    // two-component case: weights (1, i)/sqrt(2)
    const KerrCoefficients two = kerr_coefficients(1, 4);
    CHECK(two.period == 4);
    CHECK(two.component_count == 2);
    CHECK(std::abs(two.coeffs[1]) < 1e-14);
    CHECK(std::abs(two.coeffs[3]) < 1e-14);
    CHECK(std::abs(two.coeffs[2] / two.coeffs[0] - kI) < 1e-13);
    CHECK(std::abs(std::abs(two.coeffs[0]) - 1.0 / std::sqrt(2.0)) < 1e-13);

    // equal moduli and exact reconstruction for all coprime pairs, nu <= 12
    for (int nu = 1; nu <= 12; ++nu) {
        for (int mu = 1; mu <= nu; ++mu) {
            if (std::gcd(mu, nu) != 1) continue;
            const KerrCoefficients kc = kerr_coefficients(mu, nu);
            const int big = kc.period;
            double cmax = 0.0;
            for (const auto& c : kc.coeffs) cmax = std::max(cmax, std::abs(c));
            double mod = -1.0;
            for (const auto& c : kc.coeffs) {
                if (std::abs(c) <= 1e-12 * cmax) continue;
                if (mod < 0.0) mod = std::abs(c);
                CHECK(std::abs(std::abs(c) - mod) < 1e-12);
            }
            for (int m = 0; m < big; ++m) {
                Complex acc = 0.0;
                for (int k = 0; k < big; ++k)
                    acc += kc.coeffs[k] * std::exp(-2.0 * M_PI * kI *
                                                   static_cast<double>(k * m) /
                                                   static_cast<double>(big));
                const long long mm = static_cast<long long>(m) * m % nu;
                CHECK(std::abs(acc - std::exp(-2.0 * M_PI * kI *
                                              (static_cast<double>(mu) * mm / nu))) < 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(kerr_coefficients(2, 4), InvalidArgument);
}

TEST_CASE("cross_term_symbol diagonal is the transformed input") {
    const double hbar = 1.0;
    const GaussianMixed rho = to_mixed(ThermalState{0.6, (Vec(2) << 1.0, 0.4).finished(), hbar});
    const LinearOp rot = rotation_op(2.0 * M_PI / 3.0);
    const ComplexGaussianTerm diag = cross_term_symbol(rot, rho, rot);

    // a real Gaussian hill: rotated thermal state
    CHECK(diag.matrix.imag().cwiseAbs().maxCoeff() < 1e-10);
    CHECK(diag.center.imag().cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(diag.amplitude.imag()) < 1e-10);
    CHECK((diag.center.real() - rot.s * rho.center).cwiseAbs().maxCoeff() < 1e-10);
    const Mat expected_m = rot.s.inverse().transpose() * rho.m * rot.s.inverse();
    CHECK((diag.matrix.real() - expected_m).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(gaussian_integral(diag) - 1.0) < 1e-10);
}

TEST_CASE("cross_term_symbol identity-parity gives the thermal characteristic function") {
    const double hbar = 1.0;
    const Vec eta = (Vec(2) << 1.2, -0.5).finished();
    const GaussianMixed rho = to_mixed(ThermalState{0.8, eta, hbar});
    const LinearOp identity{Mat::Identity(2, 2), Vec::Zero(2)};
    const LinearOp parity = rotation_op(M_PI);

    const ComplexGaussianTerm cross = cross_term_symbol(parity, rho, identity);
    // tr(R_0 rho R_x) = 2 pi hbar chi(-2x), so the cross symbol has modulus
    // 2 chi_th(2x) for a displaced thermal input.
    NormalSampler rng(149);
    for (int i = 0; i < 10; ++i) {
        Vec x(2);
        x << 0.8 * rng(), 0.8 * rng();
        const double expected = 2.0 * thermal_chi(0.8, hbar, Vec(2.0 * x)).real();
        CHECK(std::abs(term_eval(cross, x)) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("sixteen rotation cross terms against the Fock Kerr oracle") {
    const double hbar = 1.0;
    const ThermalState ts{0.5, (Vec(2) << 1.6, 0.0).finished(), hbar};
    const GaussianSumState closed = kerr_cat(ts, 1, 8);

    oracle::FockDensity rho0 = oracle::thermal_density(ts.nbar, hbar, 200, ts.center);
    const oracle::FockDensity evolved = oracle::fock_kerr(rho0, 1, 8);
    const oracle::FockWignerEvaluator fock_eval(evolved);

    double peak = 0.0, err = 0.0;
    Vec x(2);
    for (int i = 0; i < 25; ++i) {
        for (int j = 0; j < 25; ++j) {
            x << -4.0 + 8.0 * i / 24.0, -4.0 + 8.0 * j / 24.0;
            const double wf = fock_eval(x);
            peak = std::max(peak, std::abs(wf));
            err = std::max(err, std::abs(wf - eval_state(closed, x)));
        }
    }
    CHECK(err <= 1e-6 * peak);
}

TEST_CASE("conditional cat") {
    const double hbar = 1.0;
    const GaussianMixed rho = to_mixed(ThermalState{0.4, (Vec(2) << 1.0, 0.0).finished(), hbar});
    const LinearOp identity{Mat::Identity(2, 2), Vec::Zero(2)};

    // U = 1, sign +: the state is unchanged
    const GaussianSumState same = conditional_cat(rho, identity, +1);
    const ComplexGaussianTerm direct = thermal_wigner(ThermalState{0.4, rho.center, hbar});
    NormalSampler rng(151);
    for (int i = 0; i < 8; ++i) {
        Vec x(2);
        x << rng(), rng();
        CHECK(eval_state(same, x) == doctest::Approx(term_eval(direct, x).real()).epsilon(1e-9));
    }

    // U = 1, sign -: destructive annihilation
    CHECK_THROWS_AS(conditional_cat(rho, identity, -1), VanishingNorm);

    // pure coherent input with a displacement gate equals the pure cat route
    const GaussianPure psi0 =
        make_gaussian_pure(Mat::Identity(2, 2), (Vec(2) << 0.6, -0.2).finished(), hbar);
    LinearOp shift{Mat::Identity(2, 2), (Vec(2) << -1.4, 0.8).finished()};
    const GaussianSumState via_pure = conditional_cat(psi0, shift, +1);

    GaussianMixed coherent;
    coherent.m = Mat::Identity(2, 2);
    coherent.center = psi0.center;
    coherent.hbar = hbar;
    const GaussianSumState via_mixed = conditional_cat(coherent, shift, +1);
    for (int i = 0; i < 12; ++i) {
        Vec x(2);
        x << 1.5 * rng(), 1.5 * rng();
        CHECK(eval_state(via_pure, x) ==
              doctest::Approx(eval_state(via_mixed, x)).epsilon(1e-9));
    }
    CHECK(std::abs(state_integral(via_pure) - 1.0) < 1e-12);
    CHECK(std::abs(state_integral(via_mixed) - 1.0) < 1e-12);

    // squeezed pure input must be rejected by the P-representation route
    Mat sq = Mat::Zero(2, 2);
    sq(0, 0) = 1.4;
    sq(1, 1) = 1.0 / 1.4;
    GaussianMixed squeezed_pure;
    squeezed_pure.m = (sq * sq.transpose()).inverse();
    squeezed_pure.center = Vec::Zero(2);
    squeezed_pure.hbar = hbar;
    CHECK_THROWS_AS(cross_term_symbol(identity, squeezed_pure, identity), InvalidArgument);
}

TEST_CASE("conditional cat on a pure squeezed state matches the Fock oracle") {
    const double hbar = 1.0;
    Mat sq = Mat::Zero(2, 2);
    sq(0, 0) = 1.5;
    sq(1, 1) = 1.0 / 1.5;
    const GaussianPure psi0 = make_gaussian_pure(sq, (Vec(2) << 0.8, 0.2).finished(), hbar);
    const LinearOp op{rotation2(M_PI / 2.0), (Vec(2) << -0.5, 0.7).finished()};
    const GaussianSumState closed = conditional_cat(psi0, op, +1);

    // Fock construction of N (1 + U) |psi0>
    CVec base = oracle::fock_gaussian(psi0);
    const int dim = static_cast<int>(base.size()) + 60;
    CVec psi = CVec::Zero(dim);
    psi.head(base.size()) = base;
    const oracle::FockSpace fock{dim, hbar};
    CVec rotated = oracle::metaplectic_matrix(op.s, fock) * psi;
    rotated = oracle::apply_displacement(oracle::displacement_alpha(op.xi, hbar), rotated);
    CVec total = psi + rotated;
    total /= total.norm();

    double peak = 0.0, err = 0.0;
    Vec x(2);
    for (int i = 0; i < 21; ++i) {
        for (int j = 0; j < 21; ++j) {
            x << -4.0 + 8.0 * i / 20.0, -4.0 + 8.0 * j / 20.0;
            const double wf = oracle::fock_wigner(total, x, hbar);
            peak = std::max(peak, std::abs(wf));
            err = std::max(err, std::abs(wf - eval_state(closed, x)));
        }
    }
    CHECK(err <= 1e-6 * peak);
}

TEST_CASE("kerr cat structure") {
    const double hbar = 1.0;
    const ThermalState ts{0.5, (Vec(2) << 2.0, 0.0).finished(), hbar};

    // rotational covariance: rotating the displacement rotates the state
    const GaussianSumState base = kerr_cat(ts, 1, 8);
    const Mat r = rotation2(2.0 * M_PI / 8.0);
    const ThermalState rotated{0.5, r * ts.center, hbar};
    const GaussianSumState moved = kerr_cat(rotated, 1, 8);
    NormalSampler rng(157);
    for (int i = 0; i < 10; ++i) {
        Vec x(2);
        x << 2.0 * rng(), 2.0 * rng();
        CHECK(eval_state(moved, Vec(r * x)) == doctest::Approx(eval_state(base, x)).epsilon(1e-8));
    }

    // compass: four real hills at the cardinal replicas
    int hills = 0;
    for (const auto& term : base.terms)
        if (term.matrix.imag().cwiseAbs().maxCoeff() < 1e-9 &&
            term.center.imag().cwiseAbs().maxCoeff() < 1e-9)
            ++hills;
    CHECK(hills == 4);

    // fringe geometry: opposite replicas linear, contiguous elliptic
    const GaussianMixed gm = to_mixed(ts);
    CHECK(classify_cross_term(cross_term_symbol(rotation_op(0.0), gm, rotation_op(M_PI))) ==
          CrossFringeClass::Linear);
    CHECK(classify_cross_term(
              cross_term_symbol(rotation_op(0.0), gm, rotation_op(M_PI / 2.0))) ==
          CrossFringeClass::Elliptic);

    // interference extent is narrower than the hills for nbar > 0
    const ComplexGaussianTerm contiguous =
        cross_term_symbol(rotation_op(0.0), gm, rotation_op(M_PI / 2.0));
    const Mat env_cov = contiguous.matrix.real().inverse();
    const Mat hill_cov = (2.0 * ts.nbar + 1.0) * Mat::Identity(2, 2);
    Eigen::SelfAdjointEigenSolver<Mat> es(hill_cov - env_cov, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > 0.0);

    // trace and hermiticity
    CHECK(std::abs(state_integral(base) - 1.0) < 1e-10);
    for (int i = 0; i < 20; ++i) {
        Vec x(2);
        x << 2.5 * rng(), 2.5 * rng();
        CHECK_NOTHROW(eval_state(base, x));
    }

    // purity bounded by one, equality for pure input
    CHECK(state_purity(base) <= 1.0 + 1e-8);
    const ThermalState pure_in{0.0, ts.center, hbar};
    CHECK(state_purity(kerr_cat(pure_in, 1, 8)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("binary kerr closed form") {
    const double hbar = 1.0;
    const ThermalState ts{0.5, (Vec(2) << 2.0, 0.0).finished(), hbar};

    // x = 0: the sin term vanishes and both hills contribute equally
    const double expected0 =
        term_eval(thermal_wigner(ThermalState{0.5, Vec::Zero(2), hbar}), ts.center).real();
    CHECK(binary_kerr_wigner(ts, Vec::Zero(2)) == doctest::Approx(expected0).epsilon(1e-12));

    // agreement with the two-component kerr_cat, pointwise
    const GaussianSumState general = kerr_cat(ts, 1, 4);
    const GaussianSumState closed = binary_kerr_state(ts);
    double scale = 0.0;
    NormalSampler rng(163);
    Vec x(2);
    for (int i = 0; i < 30; ++i) {
        x << 2.5 * rng(), 2.5 * rng();
        scale = std::max(scale, std::abs(eval_state(closed, x)));
    }
    for (int i = 0; i < 30; ++i) {
        x << 2.5 * rng(), 2.5 * rng();
        const double a = eval_state(closed, x);
        const double b = eval_state(general, x);
        const double c = binary_kerr_wigner(ts, x);
        CHECK(std::abs(a - b) <= 1e-12 * scale);
        CHECK(std::abs(a - c) <= 1e-12 * scale);
    }

    // fringe width shrinks with temperature
    double prev = 1e300;
    for (double nbar : {0.0, 0.5, 1.0, 2.0}) {
        const GaussianSumState st = binary_kerr_state(ThermalState{nbar, ts.center, hbar});
        Eigen::SelfAdjointEigenSolver<Mat> es(st.terms[2].matrix.real(),
                                              Eigen::EigenvaluesOnly);
        const double fwhm = 2.0 * std::sqrt(hbar * std::log(2.0) / es.eigenvalues().minCoeff());
        CHECK(fwhm < prev);
        prev = fwhm;
    }
}

TEST_CASE("squeezed thermal input produces hyperbolic contiguous fringes") {
    const double hbar = 1.0;
    Mat sq = Mat::Zero(2, 2);
    sq(0, 0) = 1.3;
    sq(1, 1) = 1.0 / 1.3;
    const GaussianMixed rho = squeezed_thermal(1.0, sq, (Vec(2) << 2.0, 0.0).finished(), hbar);
    const auto contiguous = cross_term_symbol(rotation_op(0.0), rho, rotation_op(M_PI / 2.0));
    CHECK(classify_cross_term(contiguous) == CrossFringeClass::Hyperbolic);
    // the assembled state remains a valid mixed cat
    const GaussianSumState st = kerr_cat(rho, 1, 8);
    CHECK(std::abs(state_integral(st) - 1.0) < 1e-10);
    CHECK(state_purity(st) <= 1.0 + 1e-8);
}
