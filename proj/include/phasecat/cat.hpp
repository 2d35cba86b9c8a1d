#pragma once

#include <vector>

#include "phasecat/gaussian.hpp"

namespace phasecat {

/// Superposition a |U, u> + b |V, v> of two pure Gaussian states.
struct PureCat {
    Complex a;
    Complex b;
    GaussianPure g1;
    GaussianPure g2;
};

/// Structured interference term
///   I(x) = 2 |K| Re[ e^{i x^zeta/hbar + i global_phase} G(x; G, eta) ].
/// global_phase absorbs arg(a* b), the zeta^eta/2hbar phase and the Maslov
/// contributions of the metaplectic pair.
struct InterferenceTerm {
    double k_magnitude = 0.0;
    double global_phase = 0.0;
    CMat g;
    Vec eta;
    Vec zeta_rel;
    double hbar = 1.0;

    int n() const { return static_cast<int>(eta.size()) / 2; }
};

/// Normal-form data of the fringe phase quadratic: in coordinates
/// y = transform * (V^{-1} x - eta') the quadratic part reads
/// sum_i theta_i (Q_i^2 - P_i^2)/hbar.
struct NormalForm {
    std::vector<double> thetas;  // nonnegative, descending
    Mat transform;               // orthogonal symplectic
    Mat base_change;             // the V pulled back first
    double residual = 0.0;
};

enum class FringeClass { Linear, Hyperbolic };

/// |K| and the complex symplectic G of the interference term.
/// Throws DegenerateOverlap when det[(U+V) + i(U-V)J] vanishes.
std::pair<double, CMat> interference_matrices(const Mat& u, const Mat& v);

/// Full complex prefactor K including its Maslov phase.  For n = 1 the phase
/// is exact: analytic for rotation pairs, fixed against the Fock oracle
/// otherwise (cached per (U, V)).  For n >= 2 the principal branch is used,
/// so phases are accurate up to a state-independent constant.
Complex interference_prefactor(const Mat& u, const Mat& v);

InterferenceTerm interference_term(const PureCat& cat);

/// Positive Gaussian envelope 2|K|/(pi hbar)^n exp[-(x-eta).ReG(x-eta)/hbar].
double envelope(const InterferenceTerm& term, const Vec& x);

/// Phase of the oscillatory factor at x.
double oscillation_phase(const InterferenceTerm& term, const Vec& x);

NormalForm normal_form(const Mat& u, const Mat& v);

/// Linear iff every theta_i <= tol (inclusive).
FringeClass classify_fringes(const NormalForm& nf, double tol = 1e-10);

/// Full three-part Wigner function, normalized to unit integral.  The
/// interference term is stored as a conjugate pair of complex Gaussians.
GaussianSumState cat_wigner(const PureCat& cat);

}  // namespace phasecat
