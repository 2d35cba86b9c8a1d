#include <doctest.h>

#include <cmath>

#include "phasecat/errors.hpp"
#include "phasecat/gaussian.hpp"
#include "support.hpp"

using namespace phasecat;
using phasecat::testing::quad2d;
using phasecat::testing::quad2dc;
using phasecat::testing::rotation2;

namespace {

GaussianSumState single_term_state(const ComplexGaussianTerm& t) {
    GaussianSumState st;
    st.n = t.n();
    st.hbar = t.hbar;
    st.terms = {t};
    return st;
}

}  // namespace

TEST_CASE("gauss_eval basics") {
    const CMat eye = CMat::Identity(2, 2);
    Vec x = Vec::Zero(2);
    CHECK(gauss_eval(eye, CVec::Zero(2), x, 1.0).real() == doctest::Approx(1.0 / M_PI));
    CHECK(gauss_eval(eye, CVec::Zero(2), x, 1.0).imag() == doctest::Approx(0.0));

    CMat bad = -eye;
    CHECK_THROWS_AS(gauss_eval(bad, CVec::Zero(2), x, 1.0), NotPositiveDefinite);
}

TEST_CASE("gauss_eval normalization against quadrature") {
    NormalSampler rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        Mat a(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) a(i, j) = rng();
        const Mat m = a * a.transpose() + 0.4 * Mat::Identity(2, 2);
        const double integral = quad2d(
            [&](double q, double p) {
                Vec x(2);
                x << q, p;
                return gauss_eval(m.cast<Complex>(), CVec::Zero(2), x, 1.0).real();
            },
            9.0, 257);
        CHECK(integral == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("wigner_pure") {
    const GaussianPure vac = make_gaussian_pure(Mat::Identity(2, 2), Vec::Zero(2), 1.0);
    const ComplexGaussianTerm t = wigner_pure(vac);
    Vec x = Vec::Zero(2);
    CHECK(term_eval(t, x).real() == doctest::Approx(1.0 / M_PI));

    Mat sq = Mat::Zero(2, 2);
    sq(0, 0) = 1.7;
    sq(1, 1) = 1.0 / 1.7;
    const ComplexGaussianTerm ts = wigner_pure(make_gaussian_pure(sq, Vec::Zero(2), 1.0));
    CHECK(ts.matrix(0, 0).real() == doctest::Approx(1.0 / (1.7 * 1.7)));
    CHECK(ts.matrix(1, 1).real() == doctest::Approx(1.7 * 1.7));

    // peak value 1/(pi hbar)^n at the center for every pure Gaussian
    NormalSampler rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat s = random_symplectic(1, rng);
        Vec c(2);
        c << rng(), rng();
        const double hbar = 0.5 + 0.5 * (trial % 3);
        const ComplexGaussianTerm tp = wigner_pure(make_gaussian_pure(s, c, hbar));
        CHECK(term_eval(tp, c).real() == doctest::Approx(1.0 / (M_PI * hbar)).epsilon(1e-10));
    }
}

TEST_CASE("chi_pure") {
    const double hbar = 0.7;
    NormalSampler rng(41);
    const Mat s = random_symplectic(1, rng);
    Vec center(2);
    center << 0.3, -1.1;
    const GaussianPure g = make_gaussian_pure(s, center, hbar);

    CHECK(chi_pure(g, Vec::Zero(2)).real() ==
          doctest::Approx(1.0 / (2.0 * M_PI * hbar)).epsilon(1e-12));

    // centered states: chi(2x) = 2^{-n} W(x) pointwise
    const GaussianPure g0 = make_gaussian_pure(s, Vec::Zero(2), hbar);
    const ComplexGaussianTerm w0 = wigner_pure(g0);
    for (int trial = 0; trial < 8; ++trial) {
        Vec x(2);
        x << rng(), rng();
        const Complex ratio = chi_pure(g0, Vec(2.0 * x)) / term_eval(w0, x);
        CHECK(ratio.real() == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(ratio.imag() == doctest::Approx(0.0).epsilon(1e-10));
    }

    // translation multiplies chi by a pure phase
    Vec delta(2), xi(2);
    delta << 0.4, 0.9;
    xi << -0.6, 1.3;
    const GaussianPure gd = make_gaussian_pure(s, Vec(center + delta), hbar);
    const Complex ratio = chi_pure(gd, xi) / chi_pure(g, xi);
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
    CHECK(std::arg(ratio) == doctest::Approx(wedge(delta, xi) / hbar).epsilon(1e-10));
}

TEST_CASE("translations") {
    const GaussianPure vac = make_gaussian_pure(Mat::Identity(2, 2), Vec::Zero(2), 1.0);
    GaussianSumState st = single_term_state(wigner_pure(vac));
    Vec xi(2);
    xi << 1.2, -0.7;

    const GaussianSumState same = apply_translation(st, Vec::Zero(2));
    const GaussianSumState moved = apply_translation(st, xi);
    CHECK(eval_state(moved, xi) == doctest::Approx(1.0 / M_PI));

    const GaussianSumState back = apply_translation(moved, Vec(-xi));
    NormalSampler rng(43);
    for (int i = 0; i < 10; ++i) {
        Vec x(2);
        x << rng(), rng();
        CHECK(eval_state(back, x) == doctest::Approx(eval_state(st, x)).epsilon(1e-12));
        CHECK(eval_state(same, x) == doctest::Approx(eval_state(st, x)).epsilon(1e-12));
    }
}

TEST_CASE("metaplectic covariance") {
    NormalSampler rng(47);
    const GaussianPure vac = make_gaussian_pure(Mat::Identity(2, 2), Vec::Zero(2), 1.0);
    GaussianSumState st = single_term_state(wigner_pure(vac));

    Mat sq = Mat::Zero(2, 2);
    sq(0, 0) = 1.4;
    sq(1, 1) = 1.0 / 1.4;
    const GaussianSumState squeezed = apply_metaplectic(st, sq);
    const ComplexGaussianTerm direct = wigner_pure(make_gaussian_pure(sq, Vec::Zero(2), 1.0));
    Vec x(2);
    for (int i = 0; i < 10; ++i) {
        x << rng(), rng();
        CHECK(eval_state(squeezed, x) == doctest::Approx(term_eval(direct, x).real()).epsilon(1e-12));
    }

    // covariance rule W'(x) = W(S^{-1} x) and the composition law
    const Mat s1 = random_symplectic(1, rng);
    const Mat s2 = random_symplectic(1, rng);
    const GaussianSumState a = apply_metaplectic(apply_metaplectic(st, s1), s2);
    const GaussianSumState b = apply_metaplectic(st, Mat(s2 * s1));
    for (int i = 0; i < 10; ++i) {
        x << rng(), rng();
        CHECK(eval_state(a, x) == doctest::Approx(eval_state(b, x)).epsilon(1e-11));
        CHECK(eval_state(a, x) ==
              doctest::Approx(eval_state(st, Vec((s2 * s1).inverse() * x))).epsilon(1e-11));
    }
}

TEST_CASE("gaussian_integral") {
    ComplexGaussianTerm t;
    t.amplitude = 1.0;
    t.matrix = CMat::Identity(2, 2) * Complex(1.2, 0.0);
    t.center = CVec::Zero(2);
    t.hbar = 1.0;
    CHECK(gaussian_integral(t).real() == doctest::Approx(1.0));

    t.amplitude = 0.5;
    CHECK(gaussian_integral(t).real() == doctest::Approx(0.5));

    // complex center from a folded linear phase: quadrature agrees
    Vec eta(2), zeta(2);
    eta << 0.4, -0.2;
    zeta << 1.1, 0.6;
    const ComplexGaussianTerm folded =
        make_phase_term(Complex(0.8, 0.3), CMat::Identity(2, 2) * Complex(0.9, 0.25), eta, zeta,
                        1.0);
    const Complex by_quadrature = quad2dc(
        [&](double q, double p) {
            Vec x(2);
            x << q, p;
            return term_eval(folded, x);
        },
        10.0, 513);
    CHECK(std::abs(by_quadrature - gaussian_integral(folded)) < 1e-8);
}

TEST_CASE("make_phase_term reproduces the oscillatory factor") {
    NormalSampler rng(53);
    Vec eta(2), zeta(2);
    eta << 0.7, 0.1;
    zeta << -0.9, 1.4;
    const double hbar = 0.8;
    CMat m(2, 2);
    m << Complex(1.1, 0.2), Complex(0.1, -0.1), Complex(0.1, -0.1), Complex(0.9, 0.1);
    const Complex amp(0.6, -1.1);
    const ComplexGaussianTerm t = make_phase_term(amp, m, eta, zeta, hbar);
    for (int i = 0; i < 10; ++i) {
        Vec x(2);
        x << 2.0 * rng(), 2.0 * rng();
        const Complex expected = amp * std::exp(kI * wedge(x, zeta) / hbar) *
                                 gauss_eval(m, eta.cast<Complex>(), x, hbar);
        CHECK(std::abs(term_eval(t, x) - expected) <= 1e-12 * std::abs(expected) + 1e-15);
    }
}

TEST_CASE("eval_state residue policy") {
    const GaussianPure vac = make_gaussian_pure(Mat::Identity(2, 2), Vec::Zero(2), 1.0);
    GaussianSumState st = single_term_state(wigner_pure(vac));
    CHECK(eval_state(st, Vec::Zero(2)) == doctest::Approx(1.0 / M_PI));

    // conjugate pair: real sum
    Vec eta = Vec::Zero(2), zeta(2);
    zeta << 2.0, 0.0;
    ComplexGaussianTerm half = make_phase_term(Complex(0.0, 0.35), CMat::Identity(2, 2), eta,
                                               zeta, 1.0);
    ComplexGaussianTerm conj = half;
    conj.amplitude = std::conj(half.amplitude);
    conj.matrix = half.matrix.conjugate();
    conj.center = half.center.conjugate();
    GaussianSumState pair;
    pair.n = 1;
    pair.hbar = 1.0;
    pair.terms = {half, conj};
    NormalSampler rng(59);
    for (int i = 0; i < 20; ++i) {
        Vec x(2);
        x << rng(), rng();
        CHECK_NOTHROW(eval_state(pair, x));
    }

    // a lone interference term has an order-one imaginary part
    GaussianSumState lone;
    lone.n = 1;
    lone.hbar = 1.0;
    lone.terms = {half};
    Vec probe(2);
    probe << 0.3, 0.4;
    CHECK_THROWS_AS(eval_state(lone, probe), ImaginaryResidueExceeded);
}

TEST_CASE("sample_grid") {
    const GaussianPure vac = make_gaussian_pure(Mat::Identity(2, 2), Vec::Zero(2), 1.0);
    GaussianSumState st = single_term_state(wigner_pure(vac));

    const std::vector<AxisSpec> axes{{-3.0, 3.0, 61}, {-3.0, 3.0, 61}};
    const WignerGrid grid = sample_grid(st, axes);
    REQUIRE(grid.values.size() == 61u * 61u);

    double best = -1.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < grid.values.size(); ++i)
        if (grid.values[i] > best) {
            best = grid.values[i];
            best_idx = i;
        }
    CHECK(best_idx == (30u * 61u + 30u));

    // Riemann sum approaches one, improving with refinement
    const auto riemann = [&](int count) {
        const std::vector<AxisSpec> ax{{-6.0, 6.0, count}, {-6.0, 6.0, count}};
        const WignerGrid g = sample_grid(st, ax);
        const double cell = (12.0 / (count - 1)) * (12.0 / (count - 1));
        double acc = 0.0;
        for (double v : g.values) acc += v * cell;
        return acc;
    };
    const double coarse = riemann(61);
    const double fine = riemann(121);
    CHECK(std::abs(coarse - 1.0) < 1e-4);
    CHECK(std::abs(fine - 1.0) <= std::abs(coarse - 1.0) + 1e-12);

    // parity symmetry of a symmetric state
    for (int i = 0; i < 61; ++i)
        for (int j = 0; j < 61; ++j)
            CHECK(grid.values[i * 61 + j] ==
                  doctest::Approx(grid.values[(60 - i) * 61 + (60 - j)]).epsilon(1e-12));

    CHECK_THROWS_AS(sample_grid(st, {axes[0]}), DimensionMismatch);
}

TEST_CASE("state product integrals") {
    // purity of a pure Gaussian is one
    NormalSampler rng(61);
    const Mat s = random_symplectic(1, rng);
    Vec c(2);
    c << 0.4, -0.3;
    GaussianSumState st = single_term_state(wigner_pure(make_gaussian_pure(s, c, 1.0)));
    CHECK(state_purity(st) == doctest::Approx(1.0).epsilon(1e-10));

    // overlap of displaced vacua: |<0|alpha>|^2 = e^{-|alpha|^2}
    const GaussianPure vac = make_gaussian_pure(Mat::Identity(2, 2), Vec::Zero(2), 1.0);
    Vec d(2);
    d << 1.0, 0.5;
    const GaussianSumState a = single_term_state(wigner_pure(vac));
    const GaussianSumState b =
        single_term_state(wigner_pure(make_gaussian_pure(Mat::Identity(2, 2), d, 1.0)));
    const double expected = std::exp(-d.squaredNorm() / 2.0);
    CHECK(state_overlap(a, b) == doctest::Approx(expected).epsilon(1e-10));
}
