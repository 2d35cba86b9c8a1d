#include "phasecat/oracle.hpp"

#include <unsupported/Eigen/FFT>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numeric>

#include "phasecat/errors.hpp"

namespace phasecat::oracle {

namespace {

constexpr double kTailTol = 1e-10;

// Triangular matrix elements of e^{c a^dag} (lower) applied to a vector:
// out_m = sum_{k<=m} c^{m-k} sqrt(m!/k!)/(m-k)! v_k.
CVec apply_exp_raising(Complex c, const CVec& v) {
    const int dim = static_cast<int>(v.size());
    CVec out = v;
    if (c == 0.0) return out;
    for (int m = 0; m < dim; ++m) {
        Complex acc = v(m);
        Complex t = 1.0;
        for (int k = m - 1; k >= 0; --k) {
            // ratio from (m-k-1) -> (m-k): * c * sqrt(k+1 .. ) derived below
            t *= c * std::sqrt(static_cast<double>(k + 1)) / static_cast<double>(m - k);
            acc += t * v(k);
        }
        out(m) = acc;
    }
    return out;
}

// e^{c a} (upper): out_k = sum_{j>=k} c^{j-k} sqrt(j!/k!)/(j-k)! v_j.
CVec apply_exp_lowering(Complex c, const CVec& v) {
    const int dim = static_cast<int>(v.size());
    CVec out = v;
    if (c == 0.0) return out;
    for (int k = 0; k < dim; ++k) {
        Complex acc = v(k);
        Complex t = 1.0;
        for (int j = k + 1; j < dim; ++j) {
            t *= c * std::sqrt(static_cast<double>(j)) / static_cast<double>(j - k);
            acc += t * v(j);
        }
        out(k) = acc;
    }
    return out;
}

}  // namespace

CMat FockSpace::lowering() const {
    CMat a = CMat::Zero(dim, dim);
    for (int m = 1; m < dim; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
    return a;
}

CMat FockSpace::position() const {
    const CMat a = lowering();
    return std::sqrt(hbar / 2.0) * (a + a.adjoint());
}

CMat FockSpace::momentum() const {
    const CMat a = lowering();
    return kI * std::sqrt(hbar / 2.0) * (a.adjoint() - a);
}

CVec FockSpace::vacuum() const {
    CVec v = CVec::Zero(dim);
    v(0) = 1.0;
    return v;
}

Complex displacement_alpha(const Vec& xi, double hbar) {
    if (xi.size() != 2) throw DimensionMismatch("displacement_alpha: n = 1 only");
    return Complex(xi(0), xi(1)) / std::sqrt(2.0 * hbar);
}

CVec apply_displacement(Complex alpha, const CVec& v) {
    const CVec t = apply_exp_lowering(-std::conj(alpha), v);
    const CVec u = apply_exp_raising(alpha, t);
    return std::exp(-0.5 * std::norm(alpha)) * u;
}

CMat metaplectic_matrix(const Mat& s, const FockSpace& fock) {
    if (s.rows() != 2 || s.cols() != 2) throw DimensionMismatch("metaplectic_matrix: n = 1 only");
    const EulerDecomposition eu = euler_decompose(s);
    const double theta_left = std::atan2(eu.o(0, 1), eu.o(0, 0));
    const double theta_right = std::atan2(eu.o_prime(0, 1), eu.o_prime(0, 0));
    const double r = std::log(eu.lambda(0));

    const int dim = fock.dim;
    CVec rot_left(dim), rot_right(dim);
    for (int m = 0; m < dim; ++m) {
        rot_left(m) = std::exp(-kI * theta_left * (m + 0.5));
        rot_right(m) = std::exp(-kI * theta_right * (m + 0.5));
    }
    // Squeeze exp(r (a^dag^2 - a^2)/2): real antisymmetric generator.
    Mat gen = Mat::Zero(dim, dim);
    for (int m = 0; m + 2 < dim; ++m) {
        const double val = std::sqrt(static_cast<double>((m + 1) * (m + 2)));
        gen(m + 2, m) = val;
        gen(m, m + 2) = -val;
    }
    const Mat sq = expm(Mat(0.5 * r * gen));
    CMat out = rot_left.asDiagonal() * sq.cast<Complex>() * CMat(rot_right.asDiagonal());
    return out;
}

CVec fock_gaussian(const GaussianPure& g, int dim_hint, int dim_cap) {
    if (g.n() != 1) throw InvalidArgument("fock_gaussian: n = 1 only");
    int dim = dim_hint;
    while (true) {
        FockSpace fock{dim, g.hbar};
        CVec psi = metaplectic_matrix(g.s, fock) * fock.vacuum();
        psi = apply_displacement(displacement_alpha(g.center, g.hbar), psi);
        if (occupation_tail(psi) <= kTailTol) return psi;
        if (dim >= dim_cap) throw TruncationInsufficient("fock_gaussian: tail criterion failed");
        dim = std::min(dim_cap, dim * 3 / 2);
    }
}

FockDensity pure_density(const CVec& psi, double hbar) {
    FockDensity d;
    d.rho = psi * psi.adjoint();
    d.hbar = hbar;
    return d;
}

FockDensity thermal_density(double nbar, double hbar, int dim, const std::optional<Vec>& eta) {
    if (nbar < 0.0) throw InvalidArgument("thermal_density: nbar must be nonnegative");
    FockDensity d;
    d.hbar = hbar;
    d.rho = CMat::Zero(dim, dim);
    if (nbar == 0.0) {
        d.rho(0, 0) = 1.0;
    } else {
        const double tau = nbar / (nbar + 1.0);
        double w = 1.0 - tau;
        for (int m = 0; m < dim; ++m) {
            d.rho(m, m) = w;
            w *= tau;
        }
    }
    if (eta) {
        const Complex alpha = displacement_alpha(*eta, hbar);
        // D rho D^dag column by column.
        CMat tmp(dim, dim);
        for (int c = 0; c < dim; ++c) tmp.col(c) = apply_displacement(alpha, d.rho.col(c));
        CMat res(dim, dim);
        for (int r = 0; r < dim; ++r)
            res.row(r) = apply_displacement(alpha, CVec(tmp.row(r).conjugate())).conjugate();
        d.rho = res;
    }
    return d;
}

FockDensity fock_kerr(const FockDensity& rho, int mu, int nu) {
    if (nu <= 0 || mu <= 0 || std::gcd(mu, nu) != 1)
        throw InvalidArgument("fock_kerr: mu, nu must be coprime positive integers");
    const int dim = rho.dim();
    CVec phases(dim);
    for (int m = 0; m < dim; ++m) {
        const long long mm = static_cast<long long>(m) * m % (static_cast<long long>(nu));
        phases(m) = std::exp(-2.0 * M_PI * kI * (static_cast<double>(mu) * mm / nu));
    }
    FockDensity out;
    out.hbar = rho.hbar;
    out.rho = phases.asDiagonal() * rho.rho * CMat(phases.conjugate().asDiagonal());
    return out;
}

Complex reflection_matrix_element(const CVec& bra, const CVec& ket, const Vec& x, double hbar) {
    if (bra.size() != ket.size()) throw DimensionMismatch("reflection_matrix_element: sizes");
    const Complex alpha = displacement_alpha(x, hbar);
    const CVec b = apply_displacement(-alpha, bra);
    const CVec k = apply_displacement(-alpha, ket);
    Complex acc = 0.0;
    double sign = 1.0;
    for (int m = 0; m < b.size(); ++m) {
        acc += sign * std::conj(b(m)) * k(m);
        sign = -sign;
    }
    return acc;
}

double fock_wigner(const CVec& psi, const Vec& x, double hbar) {
    return reflection_matrix_element(psi, psi, x, hbar).real() / (M_PI * hbar);
}

FockWignerEvaluator::FockWignerEvaluator(const FockDensity& rho, double weight_cut)
    : hbar_(rho.hbar) {
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (rho.rho + rho.rho.adjoint()));
    if (es.info() != Eigen::Success) throw Error("FockWignerEvaluator: eigensolver failed");
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double w = es.eigenvalues()(i);
        if (std::abs(w) > weight_cut) {
            weights_.push_back(w);
            vectors_.push_back(es.eigenvectors().col(i));
        }
    }
}

double FockWignerEvaluator::operator()(const Vec& x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        acc += weights_[i] * fock_wigner(vectors_[i], x, hbar_);
    return acc;
}

double occupation_tail(const CVec& psi) {
    const int dim = static_cast<int>(psi.size());
    const int cut = static_cast<int>(0.9 * dim);
    double tail = 0.0;
    for (int m = cut; m < dim; ++m) tail += std::norm(psi(m));
    return tail;
}

double occupation_tail(const FockDensity& rho) {
    const int dim = rho.dim();
    const int cut = static_cast<int>(0.9 * dim);
    double tail = 0.0;
    for (int m = cut; m < dim; ++m) tail += std::abs(rho.rho(m, m));
    return tail;
}

// ---------------------------------------------------------------------------

double GridWavefunction::norm() const { return std::sqrt(psi.squaredNorm() * dq); }

GridWavefunction make_grid(double q_min, double q_max, int count, double hbar) {
    if (count < 8 || q_max <= q_min) throw InvalidArgument("make_grid: bad grid spec");
    GridWavefunction wf;
    wf.q_min = q_min;
    wf.dq = (q_max - q_min) / count;  // count points, periodic-friendly spacing
    wf.psi = CVec::Zero(count);
    wf.hbar = hbar;
    return wf;
}

namespace {

void check_boundary(const GridWavefunction& wf, const char* who) {
    const int m = wf.size();
    const double peak = wf.psi.cwiseAbs().maxCoeff();
    const int edge = std::max(2, m / 256);
    double worst = 0.0;
    for (int i = 0; i < edge; ++i)
        worst = std::max({worst, std::abs(wf.psi(i)), std::abs(wf.psi(m - 1 - i))});
    if (worst > 1e-10 * peak)
        throw NyquistViolation(std::string(who) + ": wavefunction reaches the grid boundary");
}

void check_momentum_support(const CVec& spectrum, const char* who) {
    const int m = static_cast<int>(spectrum.size());
    const double peak = spectrum.cwiseAbs().maxCoeff();
    const int half = m / 2;
    double worst = 0.0;
    for (int i = -2; i <= 2; ++i)
        worst = std::max(worst, std::abs(spectrum((half + i + m) % m)));
    if (worst > 1e-10 * peak)
        throw NyquistViolation(std::string(who) + ": momentum support reaches Nyquist");
}

}  // namespace

double quadrature_wigner(const GridWavefunction& wf, double q, double p) {
    check_boundary(wf, "quadrature_wigner");
    const int m = wf.size();
    const int iq = static_cast<int>(std::lround((q - wf.q_min) / wf.dq));
    if (iq < 0 || iq >= m) throw InvalidArgument("quadrature_wigner: q outside grid");
    const int reach = std::min(iq, m - 1 - iq);
    Complex acc = std::norm(wf.psi(iq));
    for (int k = 1; k <= reach; ++k) {
        const Complex chord = std::conj(wf.psi(iq - k)) * wf.psi(iq + k);
        acc += 2.0 * (chord * std::exp(-2.0 * kI * p * (k * wf.dq) / wf.hbar)).real();
    }
    return (acc * wf.dq / (M_PI * wf.hbar)).real();
}

double quadrature_wigner_norm(const GridWavefunction& wf, double q_half, double p_half, int count) {
    double acc = 0.0;
    const double dq = 2.0 * q_half / (count - 1);
    const double dp = 2.0 * p_half / (count - 1);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            acc += quadrature_wigner(wf, -q_half + i * dq, -p_half + j * dp);
    return acc * dq * dp;
}

GridWavefunction harmonic_rotate(const GridWavefunction& wf, double theta) {
    // Split large angles so tan(theta/2) stays tame.
    if (std::abs(theta) > M_PI / 2 + 1e-12) {
        const int parts = static_cast<int>(std::ceil(std::abs(theta) / (M_PI / 2)));
        GridWavefunction cur = wf;
        for (int i = 0; i < parts; ++i) cur = harmonic_rotate(cur, theta / parts);
        return cur;
    }
    if (theta == 0.0) return wf;

    const int m = wf.size();
    const double b = std::tan(theta / 2.0);
    const double a = -std::sin(theta);
    GridWavefunction out = wf;

    const auto q_chirp = [&](GridWavefunction& w) {
        for (int i = 0; i < m; ++i) {
            const double q = w.q_at(i);
            w.psi(i) *= std::exp(kI * (0.5 * a * q * q / w.hbar));
        }
    };
    const auto p_chirp = [&](GridWavefunction& w) {
        Eigen::FFT<double> fft;
        std::vector<Complex> in(w.psi.data(), w.psi.data() + m), freq(m);
        fft.fwd(freq, in);
        const double dk = 2.0 * M_PI / (m * w.dq);
        for (int j = 0; j < m; ++j) {
            const int wrapped = j < m / 2 ? j : j - m;
            const double p = w.hbar * wrapped * dk;
            freq[j] *= std::exp(-kI * (0.5 * b * p * p / w.hbar));
        }
        check_momentum_support(Eigen::Map<CVec>(freq.data(), m), "harmonic_rotate");
        fft.inv(in, freq);
        w.psi = Eigen::Map<CVec>(in.data(), m);
    };

    p_chirp(out);
    q_chirp(out);
    p_chirp(out);
    return out;
}

GridWavefunction split_operator_kho(const GridWavefunction& psi0, double kick_strength,
                                    double tau, int kicks) {
    if (kicks < 0) throw InvalidArgument("split_operator_kho: kicks must be nonnegative");
    GridWavefunction wf = psi0;
    check_boundary(wf, "split_operator_kho");
    for (int k = 0; k < kicks; ++k) {
        wf = harmonic_rotate(wf, tau);
        for (int i = 0; i < wf.size(); ++i) {
            const double q = wf.q_at(i);
            wf.psi(i) *= std::exp(-kI * (kick_strength * std::cos(q) / wf.hbar));
        }
        check_boundary(wf, "split_operator_kho");
    }
    return wf;
}

}  // namespace phasecat::oracle
