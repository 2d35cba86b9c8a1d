#include "phasecat/kerr.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "phasecat/errors.hpp"
#include "phasecat/oracle.hpp"

namespace phasecat {

namespace {

double wrap_angle(double a) {
    while (a > M_PI) a -= 2.0 * M_PI;
    while (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

bool is_rotation(const Mat& s) {
    return (s * s.transpose() - Mat::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff() < 1e-12;
}

// ---------------------------------------------------------------------------
// Complex quadratic form c0 + lin.z + z.theta z over a real vector z; the
// carrier for joint (x, w) exponents and Gaussian block integration.
struct JointForm {
    CMat theta;
    CVec lin;
    Complex c0 = 0.0;
};

JointForm substitute_affine(const JointForm& f, const CMat& t, const CVec& s) {
    JointForm out;
    out.theta = t.transpose() * f.theta * t;
    out.theta = (0.5 * (out.theta + out.theta.transpose())).eval();
    out.lin = t.transpose() * (f.lin + 2.0 * f.theta * s);
    out.c0 = f.c0 + (f.lin.transpose() * s)(0, 0) + (s.transpose() * f.theta * s)(0, 0);
    return out;
}

// Integrate exp(form) over the trailing r coordinates; multiplies the scalar
// prefactor by pi^{r/2}/sqrt(det A).  Returns the reduced form over the
// leading coordinates.
JointForm integrate_trailing(const JointForm& f, int r, Complex& prefactor) {
    const int total = static_cast<int>(f.theta.rows());
    const int lead = total - r;
    const CMat a = -f.theta.bottomRightCorner(r, r);
    const CMat theta_xy = f.theta.topRightCorner(lead, r);
    const CMat theta_yx = f.theta.bottomLeftCorner(r, lead);
    const CVec l_y = f.lin.tail(r);

    Eigen::FullPivLU<CMat> lu(a);
    const CMat a_inv = lu.inverse();
    prefactor *= std::pow(M_PI, 0.5 * r) / sqrt_det_branch(a);

    JointForm out;
    out.theta = f.theta.topLeftCorner(lead, lead) + theta_xy * a_inv * theta_yx;
    out.theta = (0.5 * (out.theta + out.theta.transpose())).eval();
    out.lin = f.lin.head(lead) + theta_xy * a_inv * l_y;
    out.c0 = f.c0 + 0.25 * (l_y.transpose() * a_inv * l_y)(0, 0);
    return out;
}

// Present exp(form(x)) * prefactor as one ComplexGaussianTerm.
ComplexGaussianTerm present_term(const JointForm& f, Complex prefactor, double hbar) {
    const int dim = static_cast<int>(f.theta.rows());
    const int n = dim / 2;
    ComplexGaussianTerm term;
    term.hbar = hbar;
    CMat m = -hbar * f.theta;
    term.matrix = (0.5 * (m + m.transpose())).eval();
    if (!real_part_positive_definite(term.matrix))
        throw Error("cross_term_symbol: resulting Re M not positive definite");
    term.center = 0.5 * hbar * term.matrix.fullPivLu().solve(f.lin);
    const Complex quad = (term.center.transpose() * term.matrix * term.center)(0, 0) / hbar;
    term.amplitude = prefactor * std::exp(f.c0 + quad) * std::pow(M_PI * hbar, n) /
                     sqrt_det_branch(term.matrix);
    return term;
}

// Product-vs-canonical metaplectic phase: M_S M_V |0> = e^{i theta} M_{SV} |0>.
std::mutex g_prod_mutex;
std::map<std::vector<long long>, double> g_prod_cache;

std::vector<long long> prod_key(const Mat& s, const Mat& v) {
    std::vector<long long> key;
    for (const Mat* m : {&s, &v})
        for (int i = 0; i < m->rows(); ++i)
            for (int j = 0; j < m->cols(); ++j)
                key.push_back(static_cast<long long>(std::llround((*m)(i, j) * 1e12)));
    return key;
}

double metaplectic_product_phase(const Mat& s, const Mat& v) {
    const int n = static_cast<int>(s.rows()) / 2;
    if ((s - Mat::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-14) return 0.0;
    if ((v - Mat::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-14) return 0.0;
    if (n == 1 && is_rotation(s) && is_rotation(v)) {
        const double ts = std::atan2(s(0, 1), s(0, 0));
        const double tv = std::atan2(v(0, 1), v(0, 0));
        const double tsv = std::atan2((s * v)(0, 1), (s * v)(0, 0));
        return -0.5 * (ts + tv - tsv);
    }
    if (n != 1) return 0.0;  // principal convention beyond the oracle's reach

    const auto key = prod_key(s, v);
    {
        std::lock_guard<std::mutex> lock(g_prod_mutex);
        auto it = g_prod_cache.find(key);
        if (it != g_prod_cache.end()) return it->second;
    }
    const oracle::FockSpace fock{320, 1.0};
    const CVec prod = oracle::metaplectic_matrix(s, fock) *
                      (oracle::metaplectic_matrix(v, fock) * fock.vacuum());
    const CVec canon = oracle::metaplectic_matrix(s * v, fock) * fock.vacuum();
    const double phase = std::arg(canon.dot(prod));
    {
        std::lock_guard<std::mutex> lock(g_prod_mutex);
        g_prod_cache.emplace(key, phase);
    }
    return phase;
}

}  // namespace

GaussianMixed to_mixed(const ThermalState& ts) {
    if (ts.nbar < 0.0) throw InvalidArgument("thermal state: nbar must be nonnegative");
    const int dim = 2 * ts.n();
    GaussianMixed g;
    g.m = Mat::Identity(dim, dim) / (2.0 * ts.nbar + 1.0);
    g.center = ts.center;
    g.hbar = ts.hbar;
    return g;
}

GaussianMixed squeezed_thermal(double nbar, const Mat& s, const Vec& center, double hbar) {
    if (nbar < 0.0) throw InvalidArgument("squeezed_thermal: nbar must be nonnegative");
    require_symplectic(s);
    GaussianMixed g;
    g.m = (s * s.transpose()).inverse() / (2.0 * nbar + 1.0);
    g.center = center;
    g.hbar = hbar;
    return g;
}

ComplexGaussianTerm thermal_wigner(const ThermalState& ts) {
    const GaussianMixed g = to_mixed(ts);
    ComplexGaussianTerm term;
    term.amplitude = 1.0;
    term.matrix = g.m.cast<Complex>();
    term.center = g.center.cast<Complex>();
    term.hbar = g.hbar;
    return term;
}

Complex thermal_chi(double nbar, double hbar, const Vec& xi) {
    const int n = static_cast<int>(xi.size()) / 2;
    const double quad = (2.0 * nbar + 1.0) * xi.squaredNorm() / (4.0 * hbar);
    return std::pow(2.0 * M_PI * hbar, -n) * std::exp(-quad);
}

KerrCoefficients kerr_coefficients(int mu, int nu) {
    if (mu <= 0 || nu <= 0 || std::gcd(mu, nu) != 1)
        throw InvalidArgument("kerr_coefficients: mu, nu must be coprime positive integers");
    KerrCoefficients kc;
    kc.mu = mu;
    kc.nu = nu;
    kc.period = (static_cast<long long>(mu) * nu % 2 == 0) ? nu : 2 * nu;
    const int big = kc.period;
    kc.coeffs.assign(big, Complex(0.0));
    for (int k = 0; k < big; ++k) {
        Complex acc = 0.0;
        for (int m = 0; m < big; ++m) {
            const long long mm = static_cast<long long>(m) * m % nu;
            const double phase =
                -2.0 * M_PI * mu * static_cast<double>(mm) / nu + 2.0 * M_PI * k * m / static_cast<double>(big);
            acc += std::exp(kI * phase);
        }
        kc.coeffs[k] = acc / static_cast<double>(big);
    }
    double cmax = 0.0;
    for (const auto& c : kc.coeffs) cmax = std::max(cmax, std::abs(c));
    for (const auto& c : kc.coeffs)
        if (std::abs(c) > 1e-12 * cmax) ++kc.component_count;
    return kc;
}

LinearOp rotation_op(double theta, int n) {
    const Mat j = symplectic_form(n);
    LinearOp op;
    op.s = std::cos(theta) * Mat::Identity(2 * n, 2 * n) + std::sin(theta) * j;
    op.xi = Vec::Zero(2 * n);
    return op;
}

ComplexGaussianTerm cross_term_symbol(const LinearOp& op_a, const GaussianMixed& rho0,
                                      const LinearOp& op_b) {
    const int dim = static_cast<int>(rho0.center.size());
    const int n = dim / 2;
    const double hbar = rho0.hbar;
    if (op_a.s.rows() != dim || op_b.s.rows() != dim || op_a.xi.size() != dim ||
        op_b.xi.size() != dim)
        throw DimensionMismatch("cross_term_symbol: shapes");
    require_symplectic(op_a.s);
    require_symplectic(op_b.s);
    if (symmetry_defect(rho0.m) > 1e-10) throw NotSymmetric("cross_term_symbol: M0 not symmetric");

    // P-representation covariance (hbar/2)(M0^{-1} - I); must be >= 0.
    const Mat sigma_p = 0.5 * hbar * (rho0.m.inverse() - Mat::Identity(dim, dim));
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (sigma_p + sigma_p.transpose()));
    const Vec pl = es.eigenvalues();
    const double scale = std::max(pl.cwiseAbs().maxCoeff(), hbar);
    if (pl.minCoeff() < -1e-10 * scale)
        throw InvalidArgument(
            "cross_term_symbol: state has sub-vacuum noise (no Gaussian P representation); "
            "use the pure-state route");

    std::vector<int> kept;
    for (int i = 0; i < dim; ++i)
        if (pl(i) > 1e-12 * scale) kept.push_back(i);
    const int r = static_cast<int>(kept.size());

    const Mat j = symplectic_form(n);
    const Complex k_full = interference_prefactor(op_b.s, op_a.s);
    const auto [k_mag, g] = interference_matrices(op_b.s, op_a.s);
    (void)k_mag;

    const Mat delta = op_b.s - op_a.s;
    const Mat sbar = 0.5 * (op_a.s + op_b.s);
    const Vec dxi = op_b.xi - op_a.xi;
    const Vec xibar = 0.5 * (op_a.xi + op_b.xi);

    // Joint exponent over z = (x, w): the interference closed form of the
    // coherent pair at centers xi + S w, integrated against the P density.
    JointForm f;
    f.theta = CMat::Zero(2 * dim, 2 * dim);
    f.lin = CVec::Zero(2 * dim);

    const CMat jt = j.transpose().cast<Complex>();
    const CMat gc = g;
    const CMat sbar_c = sbar.cast<Complex>();
    const CMat delta_c = delta.cast<Complex>();

    // (i/hbar) x^zeta(w)
    f.lin.head(dim) += (kI / hbar) * jt * dxi.cast<Complex>();
    f.theta.topRightCorner(dim, dim) += (kI / (2.0 * hbar)) * jt * delta_c;
    f.theta.bottomLeftCorner(dim, dim) += (kI / (2.0 * hbar)) * delta_c.transpose() * j.cast<Complex>();

    // (i/2hbar) zeta(w)^eta(w)
    f.c0 += (kI / (2.0 * hbar)) * (dxi.transpose() * j.transpose() * xibar)(0, 0);
    f.lin.tail(dim) += (kI / (2.0 * hbar)) *
                       (sbar_c.transpose() * j.cast<Complex>() * dxi.cast<Complex>() +
                        delta_c.transpose() * jt * xibar.cast<Complex>());
    {
        const CMat q = delta_c.transpose() * jt * sbar_c;
        f.theta.bottomRightCorner(dim, dim) += (kI / (4.0 * hbar)) * (q + q.transpose());
    }

    // (i/2hbar)(xi_A ^ S_A w - xi_B ^ S_B w)
    f.lin.tail(dim) += (kI / (2.0 * hbar)) *
                       (op_a.s.transpose() * j * op_a.xi - op_b.s.transpose() * j * op_b.xi)
                           .cast<Complex>();

    // -(x - eta(w)) . G (x - eta(w)) / hbar
    f.theta.topLeftCorner(dim, dim) += -gc / hbar;
    f.theta.topRightCorner(dim, dim) += gc * sbar_c / hbar;
    f.theta.bottomLeftCorner(dim, dim) += sbar_c.transpose() * gc / hbar;
    f.theta.bottomRightCorner(dim, dim) += -sbar_c.transpose() * gc * sbar_c / hbar;
    f.lin.head(dim) += 2.0 * gc * xibar.cast<Complex>() / hbar;
    f.lin.tail(dim) += -2.0 * sbar_c.transpose() * gc * xibar.cast<Complex>() / hbar;
    f.c0 += -(xibar.transpose().cast<Complex>() * gc * xibar.cast<Complex>())(0, 0) / hbar;

    f.theta = (0.5 * (f.theta + f.theta.transpose())).eval();

    // Substitute w = center + B y over the nonsingular P directions.
    CMat t = CMat::Zero(2 * dim, dim + r);
    t.topLeftCorner(dim, dim) = CMat::Identity(dim, dim);
    for (int c = 0; c < r; ++c) t.block(dim, dim + c, dim, 1) = es.eigenvectors().col(kept[c]).cast<Complex>();
    CVec shift = CVec::Zero(2 * dim);
    shift.tail(dim) = rho0.center.cast<Complex>();
    JointForm sub = substitute_affine(f, t, shift);

    Complex prefactor = k_full * sqrt_det_branch(g) / std::pow(M_PI * hbar, n);
    if (r > 0) {
        for (int c = 0; c < r; ++c) {
            sub.theta(dim + c, dim + c) += Complex(-0.5 / pl(kept[c]));
            prefactor /= std::sqrt(2.0 * M_PI * pl(kept[c]));
        }
        sub = integrate_trailing(sub, r, prefactor);
    }
    return present_term(sub, prefactor, hbar);
}

GaussianSumState conditional_cat(const GaussianMixed& rho0, const LinearOp& op, int sign) {
    if (sign != 1 && sign != -1) throw InvalidArgument("conditional_cat: sign must be +-1");
    const int dim = static_cast<int>(rho0.center.size());
    LinearOp identity{Mat::Identity(dim, dim), Vec::Zero(dim)};
    const double s = static_cast<double>(sign);

    GaussianSumState state;
    state.n = rho0.n();
    state.hbar = rho0.hbar;
    ComplexGaussianTerm t_ii = cross_term_symbol(identity, rho0, identity);
    ComplexGaussianTerm t_ui = cross_term_symbol(op, rho0, identity);
    ComplexGaussianTerm t_iu = cross_term_symbol(identity, rho0, op);
    ComplexGaussianTerm t_uu = cross_term_symbol(op, rho0, op);
    t_ui.amplitude *= s;
    t_iu.amplitude *= s;
    state.terms = {t_ii, t_ui, t_iu, t_uu};
    return normalize_state(state);
}

GaussianSumState conditional_cat(const GaussianPure& psi0, const LinearOp& op, int sign) {
    if (sign != 1 && sign != -1) throw InvalidArgument("conditional_cat: sign must be +-1");
    require_symplectic(op.s);
    const double hbar = psi0.hbar;
    const Vec v2 = op.xi + op.s * psi0.center;
    const double bch = wedge(op.xi, op.s * psi0.center) / (2.0 * hbar);
    const double theta = metaplectic_product_phase(op.s, psi0.s);

    PureCat cat;
    cat.a = 1.0;
    cat.b = static_cast<double>(sign) * std::exp(kI * (bch + theta));
    cat.g1 = psi0;
    cat.g2 = GaussianPure{op.s * psi0.s, v2, hbar};
    return cat_wigner(cat);
}

GaussianSumState kerr_cat(const GaussianMixed& rho0, int mu, int nu) {
    const KerrCoefficients kc = kerr_coefficients(mu, nu);
    const int big = kc.period;
    const int n = rho0.n();
    if (n != 1) throw InvalidArgument("kerr_cat: single mode only");

    double cmax = 0.0;
    for (const auto& c : kc.coeffs) cmax = std::max(cmax, std::abs(c));

    // The propagator harmonics are e^{-i theta_k n}; relative to the
    // canonical rotations e^{-i theta (n + 1/2)} each carries e^{i theta_k/2}
    // with the angle wrapped to (-pi, pi].
    std::vector<Complex> weights(big);
    std::vector<LinearOp> rotations(big);
    for (int k = 0; k < big; ++k) {
        const double theta = wrap_angle(2.0 * M_PI * k / big);
        rotations[k] = rotation_op(theta, n);
        weights[k] = kc.coeffs[k] * std::exp(kI * (0.5 * theta));
    }

    GaussianSumState state;
    state.n = n;
    state.hbar = rho0.hbar;
    for (int k = 0; k < big; ++k) {
        if (std::abs(kc.coeffs[k]) <= 1e-12 * cmax) continue;
        for (int j = 0; j < big; ++j) {
            if (std::abs(kc.coeffs[j]) <= 1e-12 * cmax) continue;
            ComplexGaussianTerm term = cross_term_symbol(rotations[k], rho0, rotations[j]);
            term.amplitude *= weights[k] * std::conj(weights[j]);
            state.terms.push_back(term);
        }
    }
    return normalize_state(state);
}

GaussianSumState kerr_cat(const ThermalState& rho0, int mu, int nu) {
    return kerr_cat(to_mixed(rho0), mu, nu);
}

double binary_kerr_wigner(const ThermalState& ts, const Vec& x) {
    if (ts.n() != 1) throw InvalidArgument("binary_kerr_wigner: single mode only");
    const double hbar = ts.hbar;
    const double width = 2.0 * ts.nbar + 1.0;
    const Vec eta = ts.center;
    const auto w_th = [&](const Vec& y) {
        return (1.0 / width) / (M_PI * hbar) * std::exp(-y.squaredNorm() / (width * hbar));
    };
    const double osc = std::sin(wedge(x, Vec(2.0 * eta)) / hbar);
    const double chi2x = thermal_chi(ts.nbar, hbar, 2.0 * x).real();
    return 0.5 * (w_th(x + eta) + w_th(x - eta)) - 2.0 * osc * chi2x;
}

GaussianSumState binary_kerr_state(const ThermalState& ts) {
    if (ts.n() != 1) throw InvalidArgument("binary_kerr_state: single mode only");
    const double hbar = ts.hbar;
    const double width = 2.0 * ts.nbar + 1.0;
    const Mat m_hill = Mat::Identity(2, 2) / width;
    const Mat m_int = width * Mat::Identity(2, 2);

    GaussianSumState state;
    state.n = 1;
    state.hbar = hbar;

    ComplexGaussianTerm hill_plus;
    hill_plus.amplitude = 0.5;
    hill_plus.matrix = m_hill.cast<Complex>();
    hill_plus.center = (-ts.center).cast<Complex>();
    hill_plus.hbar = hbar;
    ComplexGaussianTerm hill_minus = hill_plus;
    hill_minus.center = ts.center.cast<Complex>();
    state.terms.push_back(hill_plus);
    state.terms.push_back(hill_minus);

    const Complex amp = kI / (2.0 * width);
    const ComplexGaussianTerm osc =
        make_phase_term(amp, m_int.cast<Complex>(), Vec::Zero(2), Vec(2.0 * ts.center), hbar);
    ComplexGaussianTerm osc_conj;
    osc_conj.amplitude = std::conj(osc.amplitude);
    osc_conj.matrix = osc.matrix.conjugate();
    osc_conj.center = osc.center.conjugate();
    osc_conj.hbar = hbar;
    state.terms.push_back(osc);
    state.terms.push_back(osc_conj);
    return state;
}

CrossFringeClass classify_cross_term(const ComplexGaussianTerm& term, double tol) {
    const Mat im = 0.5 * (term.matrix.imag() + term.matrix.imag().transpose());
    const double scale = std::max(1.0, term.matrix.real().cwiseAbs().maxCoeff());
    const Signature sig = signature(im, tol * scale);
    if (sig.n_plus == 0 && sig.n_minus == 0) return CrossFringeClass::Linear;
    if (sig.n_plus > 0 && sig.n_minus > 0) return CrossFringeClass::Hyperbolic;
    return CrossFringeClass::Elliptic;
}

}  // namespace phasecat
