#include "phasecat/cat.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "phasecat/errors.hpp"
#include "phasecat/oracle.hpp"

namespace phasecat {

namespace {

void require_pair(const Mat& u, const Mat& v, const char* who) {
    if (u.rows() != v.rows()) throw DimensionMismatch(std::string(who) + ": U, V of different size");
    require_symplectic(u);
    require_symplectic(v);
}

bool is_rotation(const Mat& s) {
    return (s * s.transpose() - Mat::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff() < 1e-12;
}

double wrap_angle(double a) {
    while (a > M_PI) a -= 2.0 * M_PI;
    while (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

// Cache of oracle-fixed Maslov phases, keyed by the quantized (U, V) pair.
std::mutex g_phase_mutex;
std::map<std::vector<long long>, double> g_phase_cache;

std::vector<long long> phase_key(const Mat& u, const Mat& v) {
    std::vector<long long> key;
    key.reserve(2 * u.size());
    const auto push = [&](const Mat& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                key.push_back(static_cast<long long>(std::llround(m(i, j) * 1e12)));
    };
    push(u);
    push(v);
    return key;
}

// arg K for n = 1 via one Fock evaluation of <U,0|R_0|V,0> = K sqrt(det G).
double oracle_phase(const Mat& u, const Mat& v, const CMat& g) {
    const auto key = phase_key(u, v);
    {
        std::lock_guard<std::mutex> lock(g_phase_mutex);
        auto it = g_phase_cache.find(key);
        if (it != g_phase_cache.end()) return it->second;
    }
    const double hbar = 1.0;
    const CVec psi_u = oracle::fock_gaussian(GaussianPure{u, Vec::Zero(2), hbar});
    const CVec psi_v = oracle::fock_gaussian(GaussianPure{v, Vec::Zero(2), hbar});
    const int dim = static_cast<int>(std::max(psi_u.size(), psi_v.size()));
    CVec bu = CVec::Zero(dim), bv = CVec::Zero(dim);
    bu.head(psi_u.size()) = psi_u;
    bv.head(psi_v.size()) = psi_v;
    const Complex elem = oracle::reflection_matrix_element(bu, bv, Vec::Zero(2), hbar);
    const double phase = std::arg(elem) - std::arg(sqrt_det_branch(g));
    {
        std::lock_guard<std::mutex> lock(g_phase_mutex);
        g_phase_cache.emplace(key, phase);
    }
    return phase;
}

}  // namespace

std::pair<double, CMat> interference_matrices(const Mat& u, const Mat& v) {
    require_pair(u, v, "interference_matrices");
    const int dim = static_cast<int>(u.rows());
    const int n = dim / 2;
    const Mat j = symplectic_form(n);

    const CMat overlap = (u + v).cast<Complex>() + kI * ((u - v) * j).cast<Complex>();
    const Complex det = overlap.determinant();
    if (std::abs(det) < 1e-12 * std::pow(2.0, dim))
        throw DegenerateOverlap("interference_matrices: det[(U+V)+i(U-V)J] vanishes");
    const double k_mag = std::pow(2.0, n) / std::sqrt(std::abs(det));

    const Mat uu = u * u.transpose();
    const Mat vv = v * v.transpose();
    const Mat sum = uu + vv;
    const CMat bracket =
        2.0 * CMat::Identity(dim, dim) - kI * ((uu - vv) * j).cast<Complex>();
    CMat g = sum.inverse().cast<Complex>() * bracket;
    g = (0.5 * (g + g.transpose())).eval();
    return {k_mag, g};
}

Complex interference_prefactor(const Mat& u, const Mat& v) {
    const auto [k_mag, g] = interference_matrices(u, v);
    const int n = static_cast<int>(u.rows()) / 2;

    double phase = 0.0;
    if (n == 1 && is_rotation(u) && is_rotation(v)) {
        // <R_beta, .| R_x |R_alpha, .> carries exactly e^{i(beta-alpha)/2} in
        // the harmonic convention e^{-i theta (n + 1/2)}.
        const double theta_u = std::atan2(u(0, 1), u(0, 0));
        const double theta_v = std::atan2(v(0, 1), v(0, 0));
        phase = 0.5 * (theta_u - theta_v);
    } else if (n == 1) {
        phase = oracle_phase(u, v, g);
    } else {
        const Mat j = symplectic_form(n);
        const CMat overlap = (u + v).cast<Complex>() + kI * ((u - v) * j).cast<Complex>();
        phase = -0.5 * std::arg(overlap.determinant());
    }
    return k_mag * std::exp(kI * phase);
}

InterferenceTerm interference_term(const PureCat& cat) {
    if (cat.g1.hbar != cat.g2.hbar || cat.g1.n() != cat.g2.n())
        throw DimensionMismatch("interference_term: branches disagree in n or hbar");
    if (std::abs(cat.a) == 0.0 && std::abs(cat.b) == 0.0)
        throw VanishingNorm("interference_term: both amplitudes vanish");
    const Complex k_full = interference_prefactor(cat.g1.s, cat.g2.s);
    const auto [k_mag, g] = interference_matrices(cat.g1.s, cat.g2.s);

    InterferenceTerm term;
    term.k_magnitude = k_mag;
    term.g = g;
    term.zeta_rel = cat.g1.center - cat.g2.center;
    term.eta = 0.5 * (cat.g1.center + cat.g2.center);
    term.hbar = cat.g1.hbar;
    const double phi0 = std::arg(std::conj(cat.a) * cat.b);
    term.global_phase = wrap_angle(phi0 + wedge(term.zeta_rel, term.eta) / (2.0 * term.hbar) +
                                   std::arg(k_full));
    return term;
}

double envelope(const InterferenceTerm& term, const Vec& x) {
    if (x.size() != term.eta.size()) throw DimensionMismatch("envelope: x shape");
    const Vec d = x - term.eta;
    const double quad = d.dot(term.g.real() * d);
    return 2.0 * term.k_magnitude / std::pow(M_PI * term.hbar, term.n()) *
           std::exp(-quad / term.hbar);
}

double oscillation_phase(const InterferenceTerm& term, const Vec& x) {
    if (x.size() != term.eta.size()) throw DimensionMismatch("oscillation_phase: x shape");
    const Vec d = x - term.eta;
    return term.global_phase + wedge(x, term.zeta_rel) / term.hbar +
           d.dot(term.g.imag() * d) / term.hbar;
}

NormalForm normal_form(const Mat& u, const Mat& v) {
    require_pair(u, v, "normal_form");
    const int dim = static_cast<int>(u.rows());
    const int n = dim / 2;

    const Mat pulled = v.inverse() * u;
    const SstDiagonalization d = diagonalize_sst(pulled);

    NormalForm nf;
    nf.base_change = v;
    nf.thetas.resize(n);
    for (int i = 0; i < n; ++i) nf.thetas[i] = (d.lambda(i) - 1.0) / (d.lambda(i) + 1.0);

    Mat h(dim, dim);
    h.topLeftCorner(n, n) = Mat::Identity(n, n);
    h.topRightCorner(n, n) = Mat::Identity(n, n);
    h.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
    h.bottomRightCorner(n, n) = Mat::Identity(n, n);
    h /= std::sqrt(2.0);
    const Mat j = symplectic_form(n);
    nf.transform = j * h * d.o.transpose();

    // Residual of the reduction applied to Im G' of the pulled-back pair.
    const Mat uu = pulled * pulled.transpose();
    const Mat p = uu + Mat::Identity(dim, dim);
    const Mat q = uu - Mat::Identity(dim, dim);
    const Mat im_g = -p.inverse() * q * j;
    Mat target = Mat::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        target(i, i) = nf.thetas[i];
        target(n + i, n + i) = -nf.thetas[i];
    }
    nf.residual = (nf.transform * im_g * nf.transform.transpose() - target).cwiseAbs().maxCoeff();
    return nf;
}

FringeClass classify_fringes(const NormalForm& nf, double tol) {
    for (double t : nf.thetas)
        if (t > tol) return FringeClass::Hyperbolic;
    return FringeClass::Linear;
}

GaussianSumState cat_wigner(const PureCat& cat) {
    if (cat.g1.hbar != cat.g2.hbar) throw DimensionMismatch("cat_wigner: branches disagree in hbar");
    const double wa = std::abs(cat.a);
    const double wb = std::abs(cat.b);
    if (wa == 0.0 && wb == 0.0) throw VanishingNorm("cat_wigner: both amplitudes vanish");

    GaussianSumState state;
    state.n = cat.g1.n();
    state.hbar = cat.g1.hbar;

    if (wa > 0.0) {
        ComplexGaussianTerm hill = wigner_pure(cat.g1);
        hill.amplitude = wa * wa;
        state.terms.push_back(hill);
    }
    if (wb > 0.0) {
        ComplexGaussianTerm hill = wigner_pure(cat.g2);
        hill.amplitude = wb * wb;
        state.terms.push_back(hill);
    }
    if (wa > 0.0 && wb > 0.0) {
        const InterferenceTerm it = interference_term(cat);
        const Complex amp = wa * wb * it.k_magnitude * std::exp(kI * it.global_phase);
        const ComplexGaussianTerm half =
            make_phase_term(amp, it.g, it.eta, it.zeta_rel, it.hbar);
        ComplexGaussianTerm conj_half;
        conj_half.amplitude = std::conj(half.amplitude);
        conj_half.matrix = half.matrix.conjugate();
        conj_half.center = half.center.conjugate();
        conj_half.hbar = half.hbar;
        state.terms.push_back(half);
        state.terms.push_back(conj_half);
    }
    return normalize_state(state);
}

}  // namespace phasecat
