#pragma once

#include <vector>

#include "phasecat/cat.hpp"
#include "phasecat/gaussian.hpp"
#include "phasecat/oracle.hpp"

namespace phasecat::kho {

struct KHOParams {
    double kick = 2.0;
    double tau = M_PI / 3.0;
    double hbar = 0.0128;
    int kicks = 2;
};

/// Thawed Gaussian branch psi(q) = exp[(i/hbar)(gamma (q-Q)^2/2 + P(q-Q) + alpha)].
struct Branch {
    Vec center = Vec::Zero(2);  // (Q, P)
    Complex gamma{0.0, 1.0};    // Im gamma > 0
    Complex alpha{0.0, 0.0};    // phase and log-normalization
};

struct Swarm {
    std::vector<double> nodes;
    std::vector<double> weights;  // C(q') * node spacing, real positive
    std::vector<Branch> branches;
    double hbar = 1.0;
    double residual = 0.0;  // reconstruction residual of the initial state
};

/// One KHO period on a phase-space point: harmonic rotation by tau, then the
/// momentum kick p -> p + K sin(q).  Also returns the 2x2 Jacobian.
std::pair<Vec, Mat> classical_map(const Vec& x, const KHOParams& params);

/// Decompose a q-squeezed Gaussian (S S^T diagonal, widened along q, center
/// on the q axis) into coherent states on p = 0 with real Gaussian weights.
/// Node spacing = spacing_factor * sqrt(hbar/2); nodes span +-span_sigmas
/// standard deviations of C.
Swarm decompose_squeezed(const GaussianPure& psi0, double spacing_factor = 0.4,
                         double span_sigmas = 4.0);

Complex branch_value(const Branch& b, double q, double hbar);

/// Analytic L2 inner product of two branch Gaussians.
Complex branch_inner(const Branch& a, const Branch& b, double hbar);

/// Wigner covariance matrix (inverse quadratic-form matrix) of a branch.
Mat branch_covariance(const Branch& b);

/// One KHO period: exact harmonic update of (gamma, alpha, center), then the
/// locally quadratic kick.  `frozen` drops the quadratic kick coefficient so
/// widths stay pinned.
Branch thawed_step(const Branch& b, const KHOParams& params, bool frozen = false);

Swarm propagate_swarm(const Swarm& swarm, const KHOParams& params, bool frozen = false);

/// Coherent sum of the weighted branches on a position grid.
oracle::GridWavefunction swarm_wavefunction(const Swarm& swarm,
                                            const oracle::GridWavefunction& grid_spec);

/// Exact initial wavefunction of a q-squeezed Gaussian on a grid.
oracle::GridWavefunction sample_squeezed(const GaussianPure& psi0, double q_min, double q_max,
                                         int count);

/// Assemble the pure cat of two swarm branches (phases correct up to the
/// canonical-state convention of each branch).
GaussianSumState pairwise_cat_demo(const Swarm& swarm, int i, int j);

/// Branch as a canonical pure Gaussian (covariance and center only).
GaussianPure branch_to_gaussian(const Branch& b, double hbar);

}  // namespace phasecat::kho
