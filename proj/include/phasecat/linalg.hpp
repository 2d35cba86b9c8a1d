#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace phasecat {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

constexpr Complex kI{0.0, 1.0};

/// Block symplectic form J = [[0, I], [-I, 0]] for n degrees of freedom.
Mat symplectic_form(int n);

/// Matrix exponential (scaling-and-squaring Pade, via Eigen).
Mat expm(const Mat& a);
CMat expm(const CMat& a);

/// sqrt(det M) for complex symmetric M with Re M > 0, on the branch that
/// continues the positive root of real matrices along the straight-line
/// homotopy Re M + i t Im M, t in [0,1].  The domain {Re M > 0} is convex,
/// so this branch is single valued.
Complex sqrt_det_branch(const CMat& m);

/// Max-norm relative symmetry defect.
double symmetry_defect(const Mat& m);
double symmetry_defect(const CMat& m);

/// True when the Hermitian part of m is positive definite (Cholesky test).
bool real_part_positive_definite(const CMat& m);

/// Deterministic normal deviates (Box-Muller over a 64-bit PRNG), so seeded
/// suites reproduce across standard libraries.
class NormalSampler {
  public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}
    double operator()();
    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Random symplectic matrix exp(J B) with B a random symmetric matrix whose
/// entries scale with `spread`.
Mat random_symplectic(int n, NormalSampler& rng, double spread = 0.45);

}  // namespace phasecat
