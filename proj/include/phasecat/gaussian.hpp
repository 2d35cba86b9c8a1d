#pragma once

#include <string>
#include <vector>

#include "phasecat/linalg.hpp"
#include "phasecat/symplectic.hpp"

namespace phasecat {

/// One complex Gaussian, amplitude * G(x; M, center) with the normalized
/// kernel G = sqrt(det M)/(pi hbar)^n exp[-(x-c).M(x-c)/hbar].  Complex
/// centers carry folded-in linear phase factors; M is complex symmetric with
/// Re M > 0.
struct ComplexGaussianTerm {
    Complex amplitude;
    CMat matrix;
    CVec center;
    double hbar = 1.0;

    int n() const { return static_cast<int>(center.size()) / 2; }
};

/// Pure Gaussian state |S, zeta> = T_zeta M_S |0>.
struct GaussianPure {
    Mat s;
    Vec center;
    double hbar = 1.0;

    int n() const { return static_cast<int>(center.size()) / 2; }
};

GaussianPure make_gaussian_pure(const Mat& s, const Vec& center, double hbar = 1.0);

/// Finite sum of complex Gaussian terms (cat Wigner functions, mixed cats,
/// decohered states).  Pointwise real for physical states.
struct GaussianSumState {
    std::vector<ComplexGaussianTerm> terms;
    int n = 1;
    double hbar = 1.0;
};

struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 2;
};

/// Dense evaluation of a state over a rectangular grid; values stored
/// C-order with axis 0 slowest.
struct WignerGrid {
    std::vector<AxisSpec> axes;
    std::vector<double> values;
    double hbar = 1.0;
    std::string description;

    double axis_point(int axis, int index) const;
};

/// Normalized Gaussian kernel value, branch-continuous sqrt(det M).
Complex gauss_eval(const CMat& m, const CVec& center, const Vec& x, double hbar);

Complex term_eval(const ComplexGaussianTerm& term, const Vec& x);

/// Wigner function of a pure Gaussian: G[x; (S S^T)^{-1}, zeta].
ComplexGaussianTerm wigner_pure(const GaussianPure& g);

/// Characteristic function 2^{-n} G[xi/2; (S S^T)^{-1}, 0] e^{i zeta^xi/hbar}.
Complex chi_pure(const GaussianPure& g, const Vec& xi);

GaussianSumState apply_translation(const GaussianSumState& state, const Vec& xi);

GaussianSumState apply_metaplectic(const GaussianSumState& state, const Mat& s);

/// Analytic integral over phase space.  The normalized kernel integrates to
/// one for any complex center (contour shift, Re M > 0), so this is the
/// amplitude.
Complex gaussian_integral(const ComplexGaussianTerm& term);

Complex state_integral(const GaussianSumState& state);

/// Pointwise sum; throws ImaginaryResidueExceeded when the imaginary residue
/// exceeds 1e-10 of the term-magnitude scale at x.
double eval_state(const GaussianSumState& state, const Vec& x);

WignerGrid sample_grid(const GaussianSumState& state, const std::vector<AxisSpec>& axes);

/// Rescale so the analytic integral is exactly one.
GaussianSumState normalize_state(const GaussianSumState& state);

/// Build amplitude * e^{i x^zeta/hbar} G(x; M, eta) as a single term with a
/// complex center (completing the square).
ComplexGaussianTerm make_phase_term(Complex amplitude, const CMat& m, const Vec& eta,
                                    const Vec& zeta, double hbar);

/// Integral of the pointwise product of two terms (closed form).
Complex term_product_integral(const ComplexGaussianTerm& a, const ComplexGaussianTerm& b);

/// (2 pi hbar)^n integral W_a W_b; equals tr(rho_a rho_b) for Wigner pairs.
double state_overlap(const GaussianSumState& a, const GaussianSumState& b);

/// (2 pi hbar)^n integral W^2.
double state_purity(const GaussianSumState& state);

/// Location and magnitude of the maximum of |term| over real x.
struct TermPeak {
    Vec x;
    double magnitude = 0.0;
};
TermPeak term_abs_peak(const ComplexGaussianTerm& term);

}  // namespace phasecat
