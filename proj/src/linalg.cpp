#include "phasecat/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "phasecat/errors.hpp"

namespace phasecat {

Mat symplectic_form(int n) {
    Mat j = Mat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = Mat::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
    return j;
}

Mat expm(const Mat& a) { return a.exp(); }
CMat expm(const CMat& a) { return a.exp(); }

Complex sqrt_det_branch(const CMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("sqrt_det_branch: square matrix required");
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    const CMat ms = m / scale;
    const Mat re = ms.real();
    const Mat im = ms.imag();

    // Accumulate the continuous argument of det along Re M + i t Im M.
    // Each step must rotate det by well under pi for the unwrapping to be
    // unambiguous; refine until that holds.
    int steps = 8;
    double arg_total = 0.0;
    Complex det_end;
    while (true) {
        arg_total = 0.0;
        Complex prev = Mat(re).cast<Complex>().eval().determinant();
        bool ok = std::abs(prev) > 0.0;
        for (int k = 1; ok && k <= steps; ++k) {
            const double t = static_cast<double>(k) / steps;
            CMat mk = re.cast<Complex>() + kI * t * im.cast<Complex>();
            const Complex dk = mk.determinant();
            const double dphi = std::arg(dk * std::conj(prev));
            if (std::abs(dphi) > 1.0) ok = false;
            arg_total += dphi;
            prev = dk;
        }
        det_end = prev;
        if (ok || steps >= 8192) break;
        steps *= 2;
    }
    const double n_half = 0.5 * static_cast<double>(m.rows());
    const double mag = std::sqrt(std::abs(det_end));
    return std::pow(scale, n_half) * mag * std::exp(kI * (0.5 * arg_total));
}

double symmetry_defect(const Mat& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() / scale;
}

double symmetry_defect(const CMat& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() / scale;
}

bool real_part_positive_definite(const CMat& m) {
    const Mat re = 0.5 * (m.real() + m.real().transpose());
    Eigen::LLT<Mat> llt(re);
    return llt.info() == Eigen::Success;
}

double NormalSampler::operator()() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on explicit 53-bit uniforms for cross-library determinism.
    double u1 = 0.0;
    do {
        u1 = (rng_() >> 11) * 0x1.0p-53;
    } while (u1 <= 0.0);
    const double u2 = (rng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Mat random_symplectic(int n, NormalSampler& rng, double spread) {
    Mat b(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) b(i, j) = rng();
    b = (spread * 0.5 * (b + b.transpose())).eval();
    return expm(Mat(symplectic_form(n) * b));
}

}  // namespace phasecat
