#include <doctest.h>

#include <cmath>

#include "phasecat/errors.hpp"
#include "phasecat/linalg.hpp"
#include "phasecat/symplectic.hpp"

using namespace phasecat;

namespace {

Mat rotation2(double theta) {
    Mat r(2, 2);
    r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return r;
}

}  // namespace

TEST_CASE("wedge product") {
    Vec a(2), b(2);
    a << 1.0, 0.0;
    b << 0.0, 1.0;
    CHECK(wedge(a, b) == doctest::Approx(-1.0));
    CHECK(wedge(a, a) == doctest::Approx(0.0));

    a << 2.0, 0.0;
    b << 0.0, 3.0;
    CHECK(wedge(a, b) == doctest::Approx(-6.0));

    NormalSampler rng(7);
    for (int n : {1, 2, 3}) {
        Vec x(2 * n), y(2 * n);
        for (int i = 0; i < 2 * n; ++i) {
            x(i) = rng();
            y(i) = rng();
        }
        CHECK(wedge(x, y) == doctest::Approx(-wedge(y, x)).epsilon(1e-12));
        CHECK(wedge(x, y) == doctest::Approx((symplectic_form(n) * x).dot(y)).epsilon(1e-12));
    }

    Vec c(4);
    c.setZero();
    CHECK_THROWS_AS(wedge(a, c), DimensionMismatch);
}

TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(Mat::Identity(4, 4)));
    CHECK(is_symplectic(symplectic_form(2)));
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 0.5;
    CHECK(is_symplectic(d));
    d(1, 1) = 2.0;
    CHECK_FALSE(is_symplectic(d));
    CHECK_FALSE(is_symplectic(Mat::Identity(3, 3)));
}

TEST_CASE("symplectic implies unit determinant") {
    NormalSampler rng(11);
    for (int n : {1, 2, 3}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Mat s = random_symplectic(n, rng);
            REQUIRE(is_symplectic(s));
            CHECK(std::abs(s.determinant() - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("cayley transform") {
    CHECK(cayley(Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

    // quarter rotation: C = -I
    const Mat c = cayley(rotation2(M_PI / 2.0));
    CHECK((c + Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    NormalSampler rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 3;
        const Mat s = random_symplectic(n, rng);
        Mat cs;
        try {
            cs = cayley(s);
        } catch (const SingularCayley&) {
            continue;
        }
        CHECK(symmetry_defect(cs) < 1e-12);
        // inverse transforms by congruence: C_{S^-1} = -S^T C_S S
        const Mat lhs = cayley(Mat(s.inverse()));
        const Mat rhs = -s.transpose() * cs * s;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    }

    CHECK_THROWS_AS(cayley(rotation2(M_PI)), SingularCayley);
}

TEST_CASE("euler decomposition examples") {
    // orthogonal symplectic input: Lambda = I
    const Mat o_in = rotation2(0.7);
    const EulerDecomposition eu = euler_decompose(o_in);
    CHECK((eu.lambda - Vec::Ones(2)).cwiseAbs().maxCoeff() < 1e-12);

    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0 / 3.0;
    const EulerDecomposition ed = euler_decompose(d);
    CHECK((ed.o - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(ed.lambda(0) == doctest::Approx(3.0));
    CHECK(ed.lambda(1) == doctest::Approx(1.0 / 3.0));
    CHECK((ed.o_prime - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(euler_decompose(Mat(2.0 * Mat::Identity(2, 2))), NotSymplectic);
}

TEST_CASE("euler decomposition reconstruction and structure") {
    NormalSampler rng(17);
    for (int n : {1, 2, 3}) {
        const Mat j = symplectic_form(n);
        for (int trial = 0; trial < 100; ++trial) {
            const Mat s = random_symplectic(n, rng);
            const EulerDecomposition eu = euler_decompose(s);

            const Mat back = eu.o * eu.lambda.asDiagonal() * eu.o_prime;
            CHECK((back - s).cwiseAbs().maxCoeff() <= 1e-10);

            CHECK((eu.o * eu.o.transpose() - Mat::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() <
                  1e-9);
            CHECK((eu.o * j * eu.o.transpose() - j).cwiseAbs().maxCoeff() < 1e-9);
            CHECK((eu.o_prime * eu.o_prime.transpose() - Mat::Identity(2 * n, 2 * n))
                      .cwiseAbs()
                      .maxCoeff() < 1e-8);
            CHECK((eu.o_prime * j * eu.o_prime.transpose() - j).cwiseAbs().maxCoeff() < 1e-8);

            for (int i = 0; i < n; ++i) {
                CHECK(eu.lambda(i) >= 1.0 - 1e-9);
                CHECK(eu.lambda(n + i) == doctest::Approx(1.0 / eu.lambda(i)).epsilon(1e-9));
                if (i > 0) CHECK(eu.lambda(i) <= eu.lambda(i - 1) + 1e-9);
            }
        }
    }
}

TEST_CASE("diagonalize_sst pairs eigenvalues") {
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 0.5;
    const SstDiagonalization sd = diagonalize_sst(d);
    CHECK(sd.lambda(0) == doctest::Approx(4.0));
    CHECK(sd.lambda(1) == doctest::Approx(0.25));

    const SstDiagonalization si = diagonalize_sst(Mat::Identity(6, 6));
    CHECK((si.lambda - Vec::Ones(6)).cwiseAbs().maxCoeff() < 1e-12);

    NormalSampler rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 3;
        const Mat s = random_symplectic(n, rng);
        const SstDiagonalization sd2 = diagonalize_sst(s);
        const Mat p = s * s.transpose();
        CHECK((sd2.o * sd2.lambda.asDiagonal() * sd2.o.transpose() - p).cwiseAbs().maxCoeff() <
              1e-9 * p.cwiseAbs().maxCoeff());
        Eigen::SelfAdjointEigenSolver<Mat> es(p, Eigen::EigenvaluesOnly);
        for (int i = 0; i < n; ++i) {
            const double lam = es.eigenvalues()(2 * n - 1 - i);
            CHECK(std::abs(lam * es.eigenvalues()(i) - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("signature") {
    const Signature s1 = signature(Mat::Identity(4, 4));
    CHECK(s1 == Signature{4, 0, 0});

    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -1.0;
    CHECK(signature(d) == Signature{1, 1, 0});
    CHECK(signature(Mat::Zero(4, 4)) == Signature{0, 0, 4});

    Mat asym(2, 2);
    asym << 0.0, 1.0, -1.0, 0.0;
    CHECK_THROWS_AS(signature(asym), NotSymmetric);

    // Sylvester's law: congruence preserves the signature.
    NormalSampler rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 2 + trial % 5;
        Mat m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j2 = 0; j2 < dim; ++j2) m(i, j2) = rng();
        m = (0.5 * (m + m.transpose())).eval();
        Mat p(dim, dim);
        do {
            for (int i = 0; i < dim; ++i)
                for (int j2 = 0; j2 < dim; ++j2) p(i, j2) = rng();
        } while (std::abs(p.determinant()) < 1e-3);
        CHECK(signature(Mat(p.transpose() * m * p)) == signature(m));
    }
}

TEST_CASE("sqrt_det_branch follows the continuous branch") {
    // M = e^{i theta} I continued from theta = 0: sqrt(det) = e^{i theta}
    for (double theta : {0.0, 0.2, M_PI / 4.0, 1.2}) {
        CMat m = std::exp(kI * theta) * CMat::Identity(2, 2);
        const Complex root = sqrt_det_branch(m);
        CHECK(std::abs(root - std::exp(kI * theta)) < 1e-12);
    }
    // real positive case
    CHECK(std::abs(sqrt_det_branch(CMat(4.0 * CMat::Identity(2, 2))) - 4.0) < 1e-12);
}
