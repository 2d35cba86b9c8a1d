#include "phasecat/semiclassical.hpp"

#include <cmath>

#include "phasecat/errors.hpp"

namespace phasecat::kho {

namespace {

Mat rotation2(double theta) {
    Mat r(2, 2);
    r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return r;
}

// Harmonic segment of angle theta on a branch, exact.  Splits so the
// principal log stays on the continuous branch (Im gamma > 0 keeps the
// argument in the upper half plane for theta <= pi/2).
Branch harmonic_segment(const Branch& b, double theta, double hbar) {
    if (std::abs(theta) > M_PI / 2 + 1e-12) {
        const int parts = static_cast<int>(std::ceil(std::abs(theta) / (M_PI / 2)));
        Branch cur = b;
        for (int i = 0; i < parts; ++i) cur = harmonic_segment(cur, theta / parts, hbar);
        return cur;
    }
    const double c = std::cos(theta), s = std::sin(theta);
    Branch out = b;
    const double q0 = b.center(0), p0 = b.center(1);
    out.center(0) = q0 * c + p0 * s;
    out.center(1) = -q0 * s + p0 * c;
    const Complex denom = b.gamma * s + c;
    out.gamma = (b.gamma * c - s) / denom;
    const double action = 0.25 * (p0 * p0 - q0 * q0) * std::sin(2.0 * theta) -
                          0.5 * p0 * q0 * (1.0 - std::cos(2.0 * theta));
    out.alpha = b.alpha + action + 0.5 * kI * hbar * std::log(denom);
    return out;
}

}  // namespace

std::pair<Vec, Mat> classical_map(const Vec& x, const KHOParams& params) {
    if (x.size() != 2) throw DimensionMismatch("classical_map: n = 1 only");
    const Mat rot = rotation2(params.tau);
    Vec y = rot * x;
    Mat shear = Mat::Identity(2, 2);
    shear(1, 0) = params.kick * std::cos(y(0));
    y(1) += params.kick * std::sin(y(0));
    return {y, shear * rot};
}

Swarm decompose_squeezed(const GaussianPure& psi0, double spacing_factor, double span_sigmas) {
    if (psi0.n() != 1) throw DimensionMismatch("decompose_squeezed: n = 1 only");
    const Mat cov = psi0.s * psi0.s.transpose();
    if (std::abs(cov(0, 1)) > 1e-10 * cov(0, 0))
        throw InvalidArgument("decompose_squeezed: state must be squeezed along q (diagonal covariance)");
    if (std::abs(psi0.center(1)) > 1e-12)
        throw InvalidArgument("decompose_squeezed: center must lie on the q axis");
    const double hbar = psi0.hbar;
    const double s2 = cov(0, 0);
    if (s2 < 1.0 - 1e-9)
        throw DeconvolutionIllPosed("decompose_squeezed: narrower than a coherent state in q");
    const double q0 = psi0.center(0);

    Swarm swarm;
    swarm.hbar = hbar;

    const double gamma_var = hbar * (s2 - 1.0);  // variance of C(q')
    if (gamma_var < 1e-12 * hbar) {
        swarm.nodes = {q0};
        swarm.weights = {1.0};
    } else {
        const double sigma_c = std::sqrt(gamma_var);
        const double spacing = spacing_factor * std::sqrt(hbar / 2.0);
        const int m = static_cast<int>(std::ceil(span_sigmas * sigma_c / spacing));
        const double norm_c = std::sqrt(std::sqrt(s2) / (2.0 * M_PI * gamma_var));
        for (int k = -m; k <= m; ++k) {
            const double q = q0 + k * spacing;
            swarm.nodes.push_back(q);
            swarm.weights.push_back(norm_c * std::exp(-0.5 * (q - q0) * (q - q0) / gamma_var) *
                                    spacing);
        }
    }
    for (double q : swarm.nodes) {
        Branch b;
        b.center = Vec::Zero(2);
        b.center(0) = q;
        b.gamma = kI;
        b.alpha = 0.25 * kI * hbar * std::log(M_PI * hbar);
        swarm.branches.push_back(b);
    }

    // Reconstruction residual against the exact wavefunction.
    const double width = std::sqrt(hbar * s2);
    const double half = std::abs(q0) + 8.0 * width;
    const int count = 2048;
    oracle::GridWavefunction exact = sample_squeezed(psi0, -half, half, count);
    oracle::GridWavefunction approx = swarm_wavefunction(swarm, exact);
    swarm.residual = std::sqrt((exact.psi - approx.psi).squaredNorm() * exact.dq);
    return swarm;
}

Complex branch_value(const Branch& b, double q, double hbar) {
    const double d = q - b.center(0);
    const Complex phase = 0.5 * b.gamma * d * d + b.center(1) * d + b.alpha;
    return std::exp(kI * phase / hbar);
}

Complex branch_inner(const Branch& a, const Branch& b, double hbar) {
    // integral conj(psi_a) psi_b dq: one complex Gaussian integral.
    const Complex ga = std::conj(a.gamma);
    const Complex gb = b.gamma;
    const double qa = a.center(0), pa = a.center(1);
    const double qb = b.center(0), pb = b.center(1);
    const Complex quad = kI * (gb - ga) / (2.0 * hbar);
    const Complex lin = kI * ((pb - gb * qb) - (pa - ga * qa)) / hbar;
    const Complex c0 = kI *
                       ((0.5 * gb * qb * qb - pb * qb + b.alpha) -
                        (0.5 * ga * qa * qa - pa * qa + std::conj(a.alpha))) /
                       hbar;
    const Complex mquad = -quad;  // Re > 0 from the width positivity
    return std::sqrt(M_PI / mquad) * std::exp(lin * lin / (4.0 * mquad) + c0);
}

Mat branch_covariance(const Branch& b) {
    const double im = b.gamma.imag();
    if (im <= 0.0) throw Error("branch_covariance: width positivity lost");
    const double re = b.gamma.real();
    Mat cov(2, 2);
    cov << 1.0, re, re, re * re + im * im;
    return cov / im;
}

Branch thawed_step(const Branch& b, const KHOParams& params, bool frozen) {
    Branch out = harmonic_segment(b, params.tau, params.hbar);
    if (out.gamma.imag() <= 0.0) throw Error("thawed_step: width positivity lost");
    const double q = out.center(0);
    out.center(1) += params.kick * std::sin(q);
    out.alpha -= params.kick * std::cos(q);
    if (!frozen) out.gamma += params.kick * std::cos(q);
    return out;
}

Swarm propagate_swarm(const Swarm& swarm, const KHOParams& params, bool frozen) {
    Swarm out = swarm;
    for (int k = 0; k < params.kicks; ++k)
        for (auto& b : out.branches) b = thawed_step(b, params, frozen);
    return out;
}

oracle::GridWavefunction swarm_wavefunction(const Swarm& swarm,
                                            const oracle::GridWavefunction& grid_spec) {
    oracle::GridWavefunction out = grid_spec;
    out.hbar = swarm.hbar;
    out.psi = CVec::Zero(grid_spec.size());
    for (int i = 0; i < out.size(); ++i) {
        const double q = out.q_at(i);
        Complex acc = 0.0;
        for (std::size_t j = 0; j < swarm.branches.size(); ++j)
            acc += swarm.weights[j] * branch_value(swarm.branches[j], q, swarm.hbar);
        out.psi(i) = acc;
    }
    return out;
}

oracle::GridWavefunction sample_squeezed(const GaussianPure& psi0, double q_min, double q_max,
                                         int count) {
    const Mat cov = psi0.s * psi0.s.transpose();
    const double s2 = cov(0, 0);
    const double hbar = psi0.hbar;
    oracle::GridWavefunction wf = oracle::make_grid(q_min, q_max, count, hbar);
    const double norm = std::pow(M_PI * hbar * s2, -0.25);
    for (int i = 0; i < count; ++i) {
        const double d = wf.q_at(i) - psi0.center(0);
        wf.psi(i) = norm * std::exp(-0.5 * d * d / (hbar * s2));
    }
    return wf;
}

GaussianPure branch_to_gaussian(const Branch& b, double hbar) {
    return GaussianPure{symplectic_square_root(branch_covariance(b)), b.center, hbar};
}

GaussianSumState pairwise_cat_demo(const Swarm& swarm, int i, int j) {
    if (i == j) throw InvalidArgument("pairwise_cat_demo: need two distinct branches");
    if (i < 0 || j < 0 || i >= static_cast<int>(swarm.branches.size()) ||
        j >= static_cast<int>(swarm.branches.size()))
        throw InvalidArgument("pairwise_cat_demo: branch index out of range");
    const Branch& bi = swarm.branches[i];
    const Branch& bj = swarm.branches[j];
    const double hbar = swarm.hbar;

    const auto amplitude = [&](const Branch& b, double w) {
        const double norm = std::exp(-b.alpha.imag() / hbar) *
                            std::pow(M_PI * hbar / b.gamma.imag(), 0.25);
        return w * norm * std::exp(kI * (b.alpha.real() / hbar));
    };
    PureCat cat;
    cat.a = amplitude(bi, swarm.weights[i]);
    cat.b = amplitude(bj, swarm.weights[j]);
    cat.g1 = branch_to_gaussian(bi, hbar);
    cat.g2 = branch_to_gaussian(bj, hbar);
    return cat_wigner(cat);
}

}  // namespace phasecat::kho
