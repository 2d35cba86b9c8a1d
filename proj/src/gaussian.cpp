#include "phasecat/gaussian.hpp"

#include <cmath>

#include "phasecat/errors.hpp"

namespace phasecat {

namespace {

double pow_pi_hbar(int n, double hbar) { return std::pow(M_PI * hbar, n); }

void require_term_shape(const ComplexGaussianTerm& t, const char* who) {
    const auto dim = t.center.size();
    if (dim == 0 || dim % 2 != 0 || t.matrix.rows() != dim || t.matrix.cols() != dim)
        throw DimensionMismatch(std::string(who) + ": inconsistent term shape");
    if (t.hbar <= 0.0) throw InvalidArgument(std::string(who) + ": hbar must be positive");
}

void require_state_shape(const GaussianSumState& st, const char* who) {
    for (const auto& t : st.terms) {
        require_term_shape(t, who);
        if (t.n() != st.n || t.hbar != st.hbar)
            throw DimensionMismatch(std::string(who) + ": term does not match state n/hbar");
    }
}

}  // namespace

GaussianPure make_gaussian_pure(const Mat& s, const Vec& center, double hbar) {
    if (s.rows() != center.size()) throw DimensionMismatch("make_gaussian_pure: S and center disagree");
    if (hbar <= 0.0) throw InvalidArgument("make_gaussian_pure: hbar must be positive");
    require_symplectic(s);
    return GaussianPure{s, center, hbar};
}

double WignerGrid::axis_point(int axis, int index) const {
    const AxisSpec& a = axes.at(axis);
    if (a.count < 2) throw InvalidArgument("axis_point: axis count must be >= 2");
    return a.min + (a.max - a.min) * index / (a.count - 1);
}

Complex gauss_eval(const CMat& m, const CVec& center, const Vec& x, double hbar) {
    if (m.rows() != x.size() || center.size() != x.size())
        throw DimensionMismatch("gauss_eval: shape mismatch");
    if (!real_part_positive_definite(m))
        throw NotPositiveDefinite("gauss_eval: Re M is not positive definite");
    const int n = static_cast<int>(x.size()) / 2;
    const CVec d = x.cast<Complex>() - center;
    // Bilinear (unconjugated) form d^T M d; complex centers are analytic
    // continuations, not conjugated.
    const Complex form = (d.transpose() * m * d)(0, 0);
    return sqrt_det_branch(m) / pow_pi_hbar(n, hbar) * std::exp(-form / hbar);
}

Complex term_eval(const ComplexGaussianTerm& term, const Vec& x) {
    require_term_shape(term, "term_eval");
    return term.amplitude * gauss_eval(term.matrix, term.center, x, term.hbar);
}

ComplexGaussianTerm wigner_pure(const GaussianPure& g) {
    require_symplectic(g.s);
    const Mat cov = g.s * g.s.transpose();
    ComplexGaussianTerm t;
    t.amplitude = 1.0;
    t.matrix = cov.inverse().cast<Complex>();
    t.matrix = (0.5 * (t.matrix + t.matrix.transpose())).eval();
    t.center = g.center.cast<Complex>();
    t.hbar = g.hbar;
    return t;
}

Complex chi_pure(const GaussianPure& g, const Vec& xi) {
    if (xi.size() != g.center.size()) throw DimensionMismatch("chi_pure: xi shape");
    const int n = g.n();
    const Mat cov = g.s * g.s.transpose();
    const CMat m = cov.inverse().cast<Complex>();
    const Vec half = 0.5 * xi;
    const Complex kernel = gauss_eval(m, CVec::Zero(2 * n), half, g.hbar);
    const double phase = wedge(g.center, xi) / g.hbar;
    return std::pow(2.0, -n) * kernel * std::exp(kI * phase);
}

GaussianSumState apply_translation(const GaussianSumState& state, const Vec& xi) {
    require_state_shape(state, "apply_translation");
    if (xi.size() != 2 * state.n) throw DimensionMismatch("apply_translation: xi shape");
    GaussianSumState out = state;
    for (auto& t : out.terms) t.center += xi.cast<Complex>();
    return out;
}

GaussianSumState apply_metaplectic(const GaussianSumState& state, const Mat& s) {
    require_state_shape(state, "apply_metaplectic");
    if (s.rows() != 2 * state.n) throw DimensionMismatch("apply_metaplectic: S shape");
    require_symplectic(s);
    const Mat sinv = s.inverse();
    GaussianSumState out = state;
    for (auto& t : out.terms) {
        CMat m = sinv.transpose().cast<Complex>() * t.matrix * sinv.cast<Complex>();
        t.matrix = (0.5 * (m + m.transpose())).eval();
        t.center = (s * t.center.real()).cast<Complex>() + kI * (s * t.center.imag()).cast<Complex>();
    }
    return out;
}

Complex gaussian_integral(const ComplexGaussianTerm& term) {
    require_term_shape(term, "gaussian_integral");
    if (!real_part_positive_definite(term.matrix))
        throw NotPositiveDefinite("gaussian_integral: Re M is not positive definite");
    return term.amplitude;
}

Complex state_integral(const GaussianSumState& state) {
    Complex acc = 0.0;
    for (const auto& t : state.terms) acc += gaussian_integral(t);
    return acc;
}

double eval_state(const GaussianSumState& state, const Vec& x) {
    require_state_shape(state, "eval_state");
    if (x.size() != 2 * state.n) throw DimensionMismatch("eval_state: x shape");
    Complex sum = 0.0;
    double scale = 0.0;
    for (const auto& t : state.terms) {
        const Complex v = term_eval(t, x);
        sum += v;
        scale += std::abs(v);
    }
    if (std::abs(sum.imag()) > 1e-10 * scale)
        throw ImaginaryResidueExceeded("eval_state: imaginary residue above tolerance");
    return sum.real();
}

WignerGrid sample_grid(const GaussianSumState& state, const std::vector<AxisSpec>& axes) {
    require_state_shape(state, "sample_grid");
    if (static_cast<int>(axes.size()) != 2 * state.n)
        throw DimensionMismatch("sample_grid: need one axis per phase-space dimension");
    std::size_t total = 1;
    for (const auto& a : axes) {
        if (a.count < 2) throw InvalidArgument("sample_grid: axis count must be >= 2");
        total *= static_cast<std::size_t>(a.count);
    }
    WignerGrid grid;
    grid.axes = axes;
    grid.hbar = state.hbar;
    grid.values.resize(total);

    const int dims = static_cast<int>(axes.size());
    std::vector<int> idx(dims, 0);
    Vec x(dims);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (int d = dims - 1; d >= 0; --d) {
            idx[d] = static_cast<int>(rem % axes[d].count);
            rem /= axes[d].count;
        }
        for (int d = 0; d < dims; ++d) x(d) = grid.axis_point(d, idx[d]);
        grid.values[flat] = eval_state(state, x);
    }
    return grid;
}

GaussianSumState normalize_state(const GaussianSumState& state) {
    const Complex total = state_integral(state);
    if (std::abs(total) < 1e-12) throw VanishingNorm("normalize_state: zero analytic integral");
    // Physical states have a real integral; dividing by the real part keeps
    // conjugate pairs exact.
    const Complex scale =
        std::abs(total.imag()) < 1e-10 * std::abs(total) ? Complex(total.real()) : total;
    GaussianSumState out = state;
    for (auto& t : out.terms) t.amplitude /= scale;
    return out;
}

ComplexGaussianTerm make_phase_term(Complex amplitude, const CMat& m, const Vec& eta,
                                    const Vec& zeta, double hbar) {
    const int dim = static_cast<int>(eta.size());
    if (m.rows() != dim || zeta.size() != dim) throw DimensionMismatch("make_phase_term: shapes");
    const int n = dim / 2;
    const Mat j = symplectic_form(n);
    const CVec g = (j * zeta).cast<Complex>();
    const CVec c = -0.5 * m.fullPivLu().solve(g);
    ComplexGaussianTerm t;
    t.matrix = m;
    t.hbar = hbar;
    t.center = eta.cast<Complex>() + kI * c;
    const Complex quarter = (g.transpose() * m.fullPivLu().solve(g))(0, 0) / 4.0;
    const double eta_wedge_zeta = wedge(eta, zeta);
    t.amplitude = amplitude * std::exp(kI * (eta_wedge_zeta / hbar)) * std::exp(-quarter / hbar);
    return t;
}

Complex term_product_integral(const ComplexGaussianTerm& a, const ComplexGaussianTerm& b) {
    require_term_shape(a, "term_product_integral");
    require_term_shape(b, "term_product_integral");
    if (a.center.size() != b.center.size() || a.hbar != b.hbar)
        throw DimensionMismatch("term_product_integral: mismatched terms");
    const int n = a.n();
    const double hbar = a.hbar;
    const CMat sum = a.matrix + b.matrix;
    const CVec rhs = a.matrix * a.center + b.matrix * b.center;
    const CVec mean = sum.fullPivLu().solve(rhs);
    const Complex c0 = (a.center.transpose() * a.matrix * a.center)(0, 0) +
                       (b.center.transpose() * b.matrix * b.center)(0, 0);
    const Complex quad = (rhs.transpose() * mean)(0, 0);
    const Complex pref = a.amplitude * b.amplitude * sqrt_det_branch(a.matrix) *
                         sqrt_det_branch(b.matrix) / std::pow(pow_pi_hbar(n, hbar), 2);
    return pref * pow_pi_hbar(n, hbar) / sqrt_det_branch(sum) * std::exp((quad - c0) / hbar);
}

double state_overlap(const GaussianSumState& a, const GaussianSumState& b) {
    if (a.n != b.n || a.hbar != b.hbar) throw DimensionMismatch("state_overlap: mismatched states");
    Complex acc = 0.0;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) acc += term_product_integral(ta, tb);
    return std::pow(2.0 * M_PI * a.hbar, a.n) * acc.real();
}

double state_purity(const GaussianSumState& state) { return state_overlap(state, state); }

TermPeak term_abs_peak(const ComplexGaussianTerm& term) {
    require_term_shape(term, "term_abs_peak");
    const Mat re = term.matrix.real();
    const Mat im = term.matrix.imag();
    const Vec wr = term.center.real();
    const Vec wi = term.center.imag();
    TermPeak peak;
    peak.x = wr - re.ldlt().solve(im * wi);
    peak.magnitude = std::abs(term_eval(term, peak.x));
    return peak;
}

}  // namespace phasecat
