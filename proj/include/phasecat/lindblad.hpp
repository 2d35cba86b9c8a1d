#pragma once

#include <vector>

#include "phasecat/gaussian.hpp"

namespace phasecat {

/// Quadratic Hamiltonian H = x^T B x / 2 and linear Lindblad operators
/// L_k = lambda_k ^ x.
struct LindbladChannel {
    Mat b;
    std::vector<CVec> lambdas;
    double hbar = 1.0;
};

/// Drift A = J(B - Im Y), diffusion D = hbar Re Y with Y = sum lambda lambda^dag.
struct ChannelMatrices {
    Mat a;
    Mat d;
    CMat upsilon;
    double hbar = 1.0;
};

ChannelMatrices channel_matrices(const LindbladChannel& ch);

/// Closed-form solution e^{At} C0 e^{A^T t} + int_0^t e^{As} D e^{A^T s} ds,
/// evaluated through one block matrix exponential.  C is a second-moment
/// covariance: a Gaussian weight exp[-(x-w).M(x-w)/hbar] carries
/// C = (hbar/2) M^{-1}.
CMat evolve_covariance(const CMat& c0, const ChannelMatrices& cm, double t);

/// Propagator pieces for one time: F = e^{At} and V = int_0^t e^{As} D e^{A^T s} ds.
struct FlowFactors {
    Mat f;
    Mat v;
};
FlowFactors flow_factors(const ChannelMatrices& cm, double t);

/// Evolve one Gaussian term under the channel; the term integral is
/// conserved, centers follow e^{At}, covariances follow evolve_covariance.
ComplexGaussianTerm evolve_term(const ComplexGaussianTerm& term, const ChannelMatrices& cm,
                                double t);

GaussianSumState evolve_state(const GaussianSumState& state, const LindbladChannel& ch, double t);

/// Signature bookkeeping for one evolved covariance.
struct SignatureSnapshot {
    double time = 0.0;
    Signature re_inv;
    Signature im_inv;
    bool re_positive = false;
    bool im_nonsingular = false;
};

struct SignatureReport {
    std::vector<SignatureSnapshot> snapshots;  // first entry is t = 0
    bool signatures_constant = false;
    bool re_positive_throughout = false;
    bool im_stays_nonsingular = false;  // vacuous when Im C0 is singular
};

SignatureReport check_signature_preservation(const CMat& c0, const LindbladChannel& ch,
                                             const std::vector<double>& times);

}  // namespace phasecat
