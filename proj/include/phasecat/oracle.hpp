#pragma once

#include <optional>
#include <vector>

#include "phasecat/gaussian.hpp"
#include "phasecat/linalg.hpp"

namespace phasecat::oracle {

/// Single-mode truncated Fock space (n = 1).
struct FockSpace {
    int dim;
    double hbar;

    CMat lowering() const;                    // a
    CMat position() const;                    // q = sqrt(hbar/2)(a + a^dag)
    CMat momentum() const;                    // p = i sqrt(hbar/2)(a^dag - a)
    CVec vacuum() const;
};

/// Complex displacement parameter of T_xi: alpha = (xi_q + i xi_p)/sqrt(2 hbar).
Complex displacement_alpha(const Vec& xi, double hbar);

/// Apply D(alpha) = e^{-|a|^2/2} e^{alpha a^dag} e^{-conj(alpha) a} to a state
/// vector through the exact triangular matrix elements.
CVec apply_displacement(Complex alpha, const CVec& v);

/// Metaplectic operator of a 2x2 symplectic matrix, built from the Euler
/// factors rotation * squeeze * rotation with rotations e^{-i theta(n+1/2)}.
CMat metaplectic_matrix(const Mat& s, const FockSpace& fock);

/// Fock vector of |S, zeta>; escalates the truncation until the occupation
/// tail above 0.9 N stays below 1e-10.  Throws TruncationInsufficient past
/// dim_cap.
CVec fock_gaussian(const GaussianPure& g, int dim_hint = 160, int dim_cap = 1500);

struct FockDensity {
    CMat rho;
    double hbar = 1.0;

    int dim() const { return static_cast<int>(rho.rows()); }
};

FockDensity pure_density(const CVec& psi, double hbar);

/// Bose-Einstein diagonal thermal state, displaced by eta when given.
FockDensity thermal_density(double nbar, double hbar, int dim,
                            const std::optional<Vec>& eta = std::nullopt);

/// Kerr fractional-revival conjugation by diag(e^{-2 pi i mu m^2 / nu}).
FockDensity fock_kerr(const FockDensity& rho, int mu, int nu);

/// <bra| R_x |ket> via the displaced parity operator.
Complex reflection_matrix_element(const CVec& bra, const CVec& ket, const Vec& x, double hbar);

/// Wigner value (pi hbar)^{-1} tr(rho R_x) of a pure state.
double fock_wigner(const CVec& psi, const Vec& x, double hbar);

/// Grid-friendly evaluator for mixed states; eigendecomposes once.
class FockWignerEvaluator {
  public:
    explicit FockWignerEvaluator(const FockDensity& rho, double weight_cut = 1e-13);
    double operator()(const Vec& x) const;

  private:
    std::vector<double> weights_;
    std::vector<CVec> vectors_;
    double hbar_;
};

/// Occupation above 0.9 dim; the truncation-tail criterion.
double occupation_tail(const CVec& psi);
double occupation_tail(const FockDensity& rho);

// ---------------------------------------------------------------------------
// Position-grid machinery.

/// Wavefunction sampled on a uniform position grid.
struct GridWavefunction {
    double q_min = 0.0;
    double dq = 0.0;
    CVec psi;
    double hbar = 1.0;

    int size() const { return static_cast<int>(psi.size()); }
    double q_at(int i) const { return q_min + i * dq; }
    double norm() const;
};

GridWavefunction make_grid(double q_min, double q_max, int count, double hbar);

/// Chord-integral Wigner transform at (q, p); q snaps to the nearest grid
/// point.  Throws NyquistViolation when boundary amplitude is significant.
double quadrature_wigner(const GridWavefunction& wf, double q, double p);

/// Grid integral of the Wigner transform over a rectangle (diagnostics).
double quadrature_wigner_norm(const GridWavefunction& wf, double q_half, double p_half, int count);

/// Exact harmonic rotation by angle theta (three-shear FFT split), unitary to
/// grid precision.
GridWavefunction harmonic_rotate(const GridWavefunction& wf, double theta);

/// Kicked harmonic oscillator: per period a harmonic rotation by tau followed
/// by the kick e^{-i K cos(q)/hbar}; no kick at t = 0.
GridWavefunction split_operator_kho(const GridWavefunction& psi0, double kick_strength,
                                    double tau, int kicks);

}  // namespace phasecat::oracle
