#pragma once

#include <vector>

#include "phasecat/cat.hpp"
#include "phasecat/gaussian.hpp"

namespace phasecat {

/// Thermal state of mean occupation nbar per mode, displaced to `center`.
struct ThermalState {
    double nbar = 0.0;
    Vec center;
    double hbar = 1.0;

    int n() const { return static_cast<int>(center.size()) / 2; }
};

/// Gaussian mixed state with Wigner G(x; M0, center), M0 real symmetric.
struct GaussianMixed {
    Mat m;
    Vec center;
    double hbar = 1.0;

    int n() const { return static_cast<int>(center.size()) / 2; }
};

GaussianMixed to_mixed(const ThermalState& ts);

/// Squeezed thermal: covariance (2 nbar + 1) S S^T in vacuum units.
GaussianMixed squeezed_thermal(double nbar, const Mat& s, const Vec& center, double hbar = 1.0);

/// Fourier data of the Kerr fractional-revival propagator
///   e^{-2 pi i mu n^2/nu} = sum_k c_k e^{-2 pi i k n / period}.
struct KerrCoefficients {
    int mu = 1;
    int nu = 1;
    int period = 1;                 // expansion length L
    std::vector<Complex> coeffs;    // size L
    int component_count = 0;        // nonzero coefficients
};

KerrCoefficients kerr_coefficients(int mu, int nu);

/// Unitary T_xi M_S; M_S in the canonical (Euler / harmonic-rotation)
/// convention of interference_prefactor.
struct LinearOp {
    Mat s;
    Vec xi;
};

LinearOp rotation_op(double theta, int n = 1);

/// Weyl symbol (pi hbar)^{-n} tr(U_A rho0 U_B^dag R_x) as one complex
/// Gaussian term.  rho0 must be P-representable (covariance at or above
/// vacuum); pure coherent inputs take the exact pure route.
ComplexGaussianTerm cross_term_symbol(const LinearOp& op_a, const GaussianMixed& rho0,
                                      const LinearOp& op_b);

/// N_pm (1 +/- U) rho0 (1 +/- U^dag), normalized; throws VanishingNorm on the
/// destructive degenerate branch.
GaussianSumState conditional_cat(const GaussianMixed& rho0, const LinearOp& op, int sign);

/// Pure-input variant: routes through the two-branch pure cat.
GaussianSumState conditional_cat(const GaussianPure& psi0, const LinearOp& op, int sign);

/// Kerr fractional revival sum_{k,j} c_k c_j^* M_k rho0 M_j^dag; the
/// harmonic rotations carry e^{-i theta n} phases.
GaussianSumState kerr_cat(const GaussianMixed& rho0, int mu, int nu);
GaussianSumState kerr_cat(const ThermalState& rho0, int mu, int nu);

/// Binary Kerr closed form for a displaced thermal input:
/// 2 W'(x) = W_th(x+eta) + W_th(x-eta) - 4 sin(x^2eta/hbar) chi_th(2x).
double binary_kerr_wigner(const ThermalState& ts, const Vec& x);
GaussianSumState binary_kerr_state(const ThermalState& ts);

ComplexGaussianTerm thermal_wigner(const ThermalState& ts);

/// Characteristic function of the (centered) thermal state at xi.
Complex thermal_chi(double nbar, double hbar, const Vec& xi);

enum class CrossFringeClass { Linear, Elliptic, Hyperbolic };

/// Geometry of a cross term's oscillation: signature of Im M.
CrossFringeClass classify_cross_term(const ComplexGaussianTerm& term, double tol = 1e-9);

}  // namespace phasecat
