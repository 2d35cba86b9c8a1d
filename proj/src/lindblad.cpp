#include "phasecat/lindblad.hpp"

#include <cmath>

#include "phasecat/errors.hpp"

namespace phasecat {

namespace {

Mat hermitian_real(const CMat& m) { return 0.5 * (m.real() + m.real().transpose()); }

}  // namespace

ChannelMatrices channel_matrices(const LindbladChannel& ch) {
    if (ch.b.rows() != ch.b.cols() || ch.b.rows() % 2 != 0)
        throw DimensionMismatch("channel_matrices: B must be 2n x 2n");
    if (symmetry_defect(ch.b) > 1e-10) throw NotSymmetric("channel_matrices: B must be symmetric");
    const int dim = static_cast<int>(ch.b.rows());
    const int n = dim / 2;

    CMat upsilon = CMat::Zero(dim, dim);
    for (const auto& lam : ch.lambdas) {
        if (lam.size() != dim) throw DimensionMismatch("channel_matrices: lambda size");
        upsilon += lam * lam.adjoint();
    }
    ChannelMatrices cm;
    cm.upsilon = upsilon;
    cm.hbar = ch.hbar;
    cm.d = ch.hbar * hermitian_real(upsilon);
    const Mat im_up = 0.5 * (upsilon.imag() - upsilon.imag().transpose());
    cm.a = symplectic_form(n) * (ch.b - im_up);

    if (symmetry_defect(cm.d) > 1e-10) throw Error("channel_matrices: D not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(cm.d, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()))
        throw Error("channel_matrices: D must be nonnegative");
    return cm;
}

FlowFactors flow_factors(const ChannelMatrices& cm, double t) {
    if (t < 0.0) throw InvalidArgument("flow_factors: negative time");
    const int dim = static_cast<int>(cm.a.rows());
    // Van Loan block trick: exp(t [[A, D], [0, -A^T]]) packs e^{At} and the
    // diffusion integral into one exponential, valid for any A.
    Mat block = Mat::Zero(2 * dim, 2 * dim);
    block.topLeftCorner(dim, dim) = cm.a;
    block.topRightCorner(dim, dim) = cm.d;
    block.bottomRightCorner(dim, dim) = -cm.a.transpose();
    const Mat e = expm(Mat(block * t));
    FlowFactors out;
    out.f = e.topLeftCorner(dim, dim);
    out.v = e.topRightCorner(dim, dim) * out.f.transpose();
    out.v = (0.5 * (out.v + out.v.transpose())).eval();
    return out;
}

CMat evolve_covariance(const CMat& c0, const ChannelMatrices& cm, double t) {
    if (c0.rows() != cm.a.rows() || c0.cols() != cm.a.cols())
        throw DimensionMismatch("evolve_covariance: C0 shape");
    if (symmetry_defect(c0) > 1e-9) throw NotSymmetric("evolve_covariance: C0 must be symmetric");
    if (!real_part_positive_definite(c0))
        throw NotPositiveDefinite("evolve_covariance: Re C0 must be positive definite");
    const FlowFactors ff = flow_factors(cm, t);
    CMat c = ff.f.cast<Complex>() * c0 * ff.f.transpose().cast<Complex>() + ff.v.cast<Complex>();
    return (0.5 * (c + c.transpose())).eval();
}

ComplexGaussianTerm evolve_term(const ComplexGaussianTerm& term, const ChannelMatrices& cm,
                                double t) {
    if (term.matrix.rows() != cm.a.rows()) throw DimensionMismatch("evolve_term: shapes");
    if (term.hbar != cm.hbar) throw DimensionMismatch("evolve_term: hbar mismatch");
    const double half_hbar = 0.5 * term.hbar;

    const CMat sigma0 = half_hbar * term.matrix.inverse();
    const CMat sigma = evolve_covariance((0.5 * (sigma0 + sigma0.transpose())).eval(), cm, t);

    ComplexGaussianTerm out;
    out.hbar = term.hbar;
    out.amplitude = term.amplitude;
    CMat m = half_hbar * sigma.inverse();
    out.matrix = (0.5 * (m + m.transpose())).eval();
    if (!real_part_positive_definite(out.matrix))
        throw Error("evolve_term: evolved Re M lost positivity (tolerance breach)");
    const FlowFactors ff = flow_factors(cm, t);
    out.center = ff.f.cast<Complex>() * term.center;
    return out;
}

GaussianSumState evolve_state(const GaussianSumState& state, const LindbladChannel& ch, double t) {
    if (ch.hbar != state.hbar) throw DimensionMismatch("evolve_state: hbar mismatch");
    const ChannelMatrices cm = channel_matrices(ch);
    GaussianSumState out = state;
    for (auto& term : out.terms) term = evolve_term(term, cm, t);
    return out;
}

SignatureReport check_signature_preservation(const CMat& c0, const LindbladChannel& ch,
                                             const std::vector<double>& times) {
    const ChannelMatrices cm = channel_matrices(ch);
    const double scale = c0.cwiseAbs().maxCoeff();

    const auto snapshot = [&](const CMat& c, double time) {
        SignatureSnapshot s;
        s.time = time;
        const CMat cinv = c.inverse();
        s.re_inv = signature(hermitian_real(cinv));
        s.im_inv = signature(0.5 * (cinv.imag() + cinv.imag().transpose()));
        Eigen::SelfAdjointEigenSolver<Mat> re_es(hermitian_real(c), Eigen::EigenvaluesOnly);
        s.re_positive = re_es.eigenvalues().minCoeff() > 0.0;
        const Mat im = 0.5 * (c.imag() + c.imag().transpose());
        Eigen::SelfAdjointEigenSolver<Mat> im_es(im, Eigen::EigenvaluesOnly);
        s.im_nonsingular = im_es.eigenvalues().cwiseAbs().minCoeff() > 1e-10 * scale;
        return s;
    };

    SignatureReport report;
    report.snapshots.push_back(snapshot(c0, 0.0));
    for (double t : times) report.snapshots.push_back(snapshot(evolve_covariance(c0, cm, t), t));

    const auto& first = report.snapshots.front();
    report.signatures_constant = true;
    report.re_positive_throughout = true;
    report.im_stays_nonsingular = true;
    for (const auto& s : report.snapshots) {
        if (!(s.re_inv == first.re_inv) || !(s.im_inv == first.im_inv))
            report.signatures_constant = false;
        if (!s.re_positive) report.re_positive_throughout = false;
        if (first.im_nonsingular && !s.im_nonsingular) report.im_stays_nonsingular = false;
    }
    return report;
}

}  // namespace phasecat
